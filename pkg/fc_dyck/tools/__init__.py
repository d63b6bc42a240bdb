"""
Tools module - registers all MCP tools
"""
import logging

from fastmcp import FastMCP

from ..config import LOGGER_NAME
from .combinatorics_tools import register_combinatorics_tools
from .module_tools import register_module_tools

logger = logging.getLogger(LOGGER_NAME)


def register_all_tools(mcp: FastMCP):
    """Register all tools with the MCP server"""
    register_combinatorics_tools(mcp)
    register_module_tools(mcp)
    logger.debug("Registered combinatorics and module tools")
