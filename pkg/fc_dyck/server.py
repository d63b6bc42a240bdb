"""
fc-dyck MCP server over stdio: the CLI's payload builders as MCP tools.
"""
import logging

from fastmcp import FastMCP

from .config import LOGGER_NAME, max_height, setup_logging
from .tools import register_all_tools

logger = logging.getLogger(LOGGER_NAME)

mcp = FastMCP("fc-dyck")
register_all_tools(mcp)


def main():
    """Main entry point"""
    setup_logging()
    logger.info(f"Starting fc-dyck MCP server in stdio mode (height guard {max_height()})")
    mcp.run()


if __name__ == "__main__":
    main()
