"""wbrauer test suite."""
