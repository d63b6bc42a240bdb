"""
Decorators for logging and monitoring
"""
import functools
import logging
import time
from typing import Any, Callable, Dict

from .config import LOGGER_NAME
from .exceptions import FCDyckError

logger = logging.getLogger(LOGGER_NAME)


def _error_payload(name: str, e: Exception, elapsed: float) -> Dict[str, Any]:
    if isinstance(e, FCDyckError):
        logger.warning(f"⚠️  {name} rejected input after {elapsed:.2f}s: {e}")
        return e.to_dict()
    if isinstance(e, ValueError):
        logger.warning(f"⚠️  {name} rejected input after {elapsed:.2f}s: {e}")
        return {"error": str(e), "code": "invalid_argument"}
    logger.error(f"❌ {name} failed after {elapsed:.2f}s: {e}", exc_info=True)
    return {"error": str(e), "code": "internal"}


def log_tool_execution(func: Callable) -> Callable:
    """
    Log an async MCP tool's parameters and run time; domain errors come back
    as {"error", "code"} payloads instead of exceptions.
    """
    @functools.wraps(func)
    async def wrapper(*args, **kwargs) -> Any:
        tool_name = func.__name__
        logger.info(f"🔧 Tool called: {tool_name}")
        if kwargs:
            safe_kwargs = {k: v for k, v in kwargs.items() if v is not None}
            logger.info(f"   Parameters: {safe_kwargs}")
        start_time = time.time()
        try:
            result = await func(*args, **kwargs)
        except Exception as e:
            return _error_payload(f"Tool {tool_name}", e, time.time() - start_time)
        logger.info(f"✅ Tool {tool_name} completed in {time.time() - start_time:.2f}s")
        return result

    return wrapper


def log_command(func: Callable) -> Callable:
    """Synchronous twin of log_tool_execution for CLI subcommands."""
    @functools.wraps(func)
    def wrapper(*args, **kwargs) -> Any:
        name = func.__name__
        logger.debug(f"Command: {name}")
        start_time = time.time()
        try:
            result = func(*args, **kwargs)
        except Exception as e:
            return _error_payload(f"Command {name}", e, time.time() - start_time)
        logger.debug(f"Command {name} completed in {time.time() - start_time:.2f}s")
        return result

    return wrapper
