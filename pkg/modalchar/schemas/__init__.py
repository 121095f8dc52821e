"""Pydantic schemas for model files, relations, reports and run settings."""
