# hyperstate package (for tests/imports).

__version__ = "0.1.0"
