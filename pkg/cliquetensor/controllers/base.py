"""
Base controller with common functionality for all command controllers.
"""
import json
import math
import re
from typing import Any, Dict, NamedTuple, Optional

from pydantic import BaseModel

from cliquetensor.core.exceptions import CliqueTensorException, VerificationFailure
from cliquetensor.core.logging import get_logger

logger = get_logger(__name__)

_FLOAT_TOKEN = re.compile(r'"@float:([^"]+)"')


def format_float(value: float) -> str:
    """17 significant digits; integral values keep a trailing ".0"."""
    text = format(value, ".17g")
    if text.lstrip("-").isdigit():
        text += ".0"
    return text


def _tag_floats(value: Any) -> Any:
    if isinstance(value, bool):
        return value
    if isinstance(value, float) and math.isfinite(value):
        return f"@float:{format_float(value)}"
    if isinstance(value, dict):
        return {key: _tag_floats(item) for key, item in value.items()}
    if isinstance(value, (list, tuple)):
        return [_tag_floats(item) for item in value]
    return value


class CommandResult(NamedTuple):
    """Exit code, the document for standard output (or ``output``) and an error document for standard error."""
    exit_code: int
    document: Any = None
    error: Optional[Dict[str, Any]] = None
    output: Optional[str] = None


class BaseController:
    """Base controller with common error handling and output formatting."""

    @staticmethod
    def handle_exception(e: Exception, operation: str = "operation") -> CommandResult:
        """Map an exception to an exit code and an error document."""
        if isinstance(e, VerificationFailure):
            logger.warning(f"{operation} failed: {e.message}")
            return CommandResult(e.exit_code, e.report, BaseController.create_error_response(e.message, e.details))
        if isinstance(e, CliqueTensorException):
            logger.warning(f"{operation} failed: {e.message}")
            return CommandResult(e.exit_code, None, BaseController.create_error_response(e.message, e.details))
        logger.exception(f"Unexpected error during {operation}: {e}")
        return CommandResult(1, None, BaseController.create_error_response("Internal error"))

    @staticmethod
    def create_success_response(document: Any) -> CommandResult:
        return CommandResult(0, document)

    @staticmethod
    def create_error_response(message: str, details: Optional[Dict[str, Any]] = None) -> Dict[str, Any]:
        """Create a standardized error document."""
        response: Dict[str, Any] = {
            "success": False,
            "message": message
        }
        if details:
            response["details"] = details
        return response

    @staticmethod
    def require_pass(report: Any, passed: bool, check: str) -> CommandResult:
        """Success when the check passed, otherwise a VerificationFailure carrying the report."""
        if not passed:
            raise VerificationFailure(f"Check {check} did not pass", report=report)
        return CommandResult(0, report)

    @staticmethod
    def render(document: Any) -> str:
        """Serialize a document: models and dicts as indented JSON, strings verbatim."""
        if isinstance(document, BaseModel):
            document = document.model_dump(mode="json")
        if isinstance(document, str):
            return document
        text = json.dumps(_tag_floats(document), indent=2, ensure_ascii=False, default=str)
        return _FLOAT_TOKEN.sub(lambda match: match.group(1), text)
