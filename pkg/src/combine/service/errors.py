"""Uniform ApiError envelope: {code, message, detail} on every error path."""

from __future__ import annotations

from fastapi import FastAPI, Request
from fastapi.exceptions import RequestValidationError
from fastapi.responses import JSONResponse


class ApiException(Exception):
    def __init__(self, code: str, message: str, status: int = 400, detail: dict | None = None):
        super().__init__(message)
        self.code = code
        self.message = message
        self.status = status
        self.detail = detail or {}

    def envelope(self) -> dict:
        return {"code": self.code, "message": self.message, "detail": self.detail}


def install_handlers(app: FastAPI) -> None:
    @app.exception_handler(ApiException)
    async def api_exception(request: Request, exc: ApiException):
        return JSONResponse(status_code=exc.status, content=exc.envelope())

    @app.exception_handler(RequestValidationError)
    async def request_validation(request: Request, exc: RequestValidationError):
        detail = {"errors": [{"loc": list(map(str, e["loc"])), "msg": e["msg"]} for e in exc.errors()]}
        envelope = {"code": "validation-error", "message": "request body failed validation", "detail": detail}
        return JSONResponse(status_code=400, content=envelope)

    @app.exception_handler(Exception)
    async def fallback(request: Request, exc: Exception):
        envelope = {"code": "internal-error", "message": str(exc), "detail": {}}
        return JSONResponse(status_code=500, content=envelope)
