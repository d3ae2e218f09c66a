"""hybridcodes test suite."""
