"""
Combinatorics tools: the T(n,k) triangle, fully commutative elements and the
word/path bijection
"""
import logging
from typing import Any, Dict, List, Union

from fastmcp import FastMCP

from ..config import LOGGER_NAME
from ..decorators import log_tool_execution
from ..resolvers import (
    enumerate_logic,
    path_of_logic,
    render_logic,
    table_logic,
    word_of_logic,
)

logger = logging.getLogger(LOGGER_NAME)


def register_combinatorics_tools(mcp: FastMCP):
    """Register all combinatorics tools with the MCP server"""
    @mcp.tool()
    @log_tool_execution
    async def t_triangle(n_max: int) -> Dict[str, Any]:
        """
        Count Dyck paths by semilength n and statistic k = (sum of peak heights) - (number of peaks).

        Args:
            n_max: Last row to compute (rows 0..n_max)

        Returns:
            Dictionary with:
            - rows: rows[n][k] = T(n,k), each row cut after its last non-zero entry
            - row_sums: sum of each row (always the Catalan number C_n)
            - catalan: C_0..C_{n_max}
            - text: the triangle as aligned text

        Examples:
            t_triangle(6) → rows[6] == [1, 5, 14, 25, 31, 26, 16, 9, 4, 1]
        """
        return table_logic(n_max)

    @mcp.tool()
    @log_tool_execution
    async def enumerate_fully_commutative(rank: int, length: int, output: str = "words") -> Dict[str, Any]:
        """
        List the fully commutative elements of type A_rank with the given length.

        Args:
            rank: n >= 1 (generators s_1..s_n)
            length: number of letters k
            output: "words" for canonical words and segments, "paths" for Dyck paths

        Returns:
            Dictionary with rank, length, count and elements in canonical order

        Examples:
            enumerate_fully_commutative(2, 2) → count 2 ([2,1] and [1,2] as segments)
        """
        return enumerate_logic(rank, length, output)

    @mcp.tool()
    @log_tool_execution
    async def path_of_word(word: Union[str, List[int]], rank: int) -> Dict[str, Any]:
        """
        Map a fully commutative word to its Dyck path of semilength rank+1.

        Args:
            word: JSON array "[3,2,1,4,3]", list [3,2,1,4,3] or digits "32143"
            rank: n, the largest allowed letter

        Returns:
            Dictionary with the canonical word, its segments, the path and its statistic

        Examples:
            path_of_word("32143", 4) → path "UUUUDDUDDD", statistic 5
        """
        return path_of_logic(word, rank)

    @mcp.tool()
    @log_tool_execution
    async def word_of_path(path: str) -> Dict[str, Any]:
        """
        Read the canonical word off a Dyck path (blocks under peaks of height >= 2).

        Args:
            path: Step string of U and D, e.g. "UDUUDUUDDD"

        Returns:
            Dictionary with word, rank (semilength - 1) and segments

        Examples:
            word_of_path("UDUUDUUDDD") → word [2,4,3], rank 4
            word_of_path("UDUDUDUDUD") → word [], rank 4
        """
        return word_of_logic(path)

    @mcp.tool()
    @log_tool_execution
    async def render_path(path: str, svg: bool = False) -> Dict[str, Any]:
        """
        Draw a Dyck path with the labeled blocks under its peaks.

        Args:
            path: Step string of U and D
            svg: True for a standalone SVG document, False for monospace text

        Returns:
            Dictionary with path, format, peaks and drawing
        """
        return render_logic(path, svg)
