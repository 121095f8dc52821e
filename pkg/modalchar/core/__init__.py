"""Configuration, connective names and the exception hierarchy."""
