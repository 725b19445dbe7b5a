"""Service layer: pydantic request/response models and the FastAPI app.

`handlers` exposes the request-model -> response-dict functions; they are
shared between the HTTP endpoints in `service` and the thin-client CLI.
"""
