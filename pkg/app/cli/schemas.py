from typing import Any, Dict, List

from pydantic import BaseModel


class CommandError(BaseModel):
    code: str
    message: str


class CommandResult(BaseModel):
    command: str
    status: str = "success"
    exit_code: int = 0
    payload: Dict[str, Any] = {}
    warnings: List[str] = []
    error: CommandError | None = None
