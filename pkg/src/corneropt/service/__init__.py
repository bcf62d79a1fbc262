"""Service layer: pydantic schemas, request handlers, and the FastAPI app."""
