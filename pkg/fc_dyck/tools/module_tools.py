"""
Module tools: homogeneous components, dimensions and the KLR relation sweep
"""
import logging
from typing import Any, Dict, List, Optional, Union

from fastmcp import FastMCP

from ..config import LOGGER_NAME
from ..decorators import log_tool_execution
from ..resolvers import census_logic, component_logic, dimension_logic, verify_logic

logger = logging.getLogger(LOGGER_NAME)


def register_module_tools(mcp: FastMCP):
    """Register all module tools with the MCP server"""
    @mcp.tool()
    @log_tool_execution
    async def homogeneous_component(word: Union[str, List[int]], rank: int) -> Dict[str, Any]:
        """
        All reduced words of a fully commutative element: the basis of its homogeneous module.

        Args:
            word: Any reduced word of the element, as JSON array, list or digits
            rank: n, the largest allowed letter

        Returns:
            Dictionary with rank, canonical word, segments, size and the sorted words

        Examples:
            homogeneous_component("32143", 4) → size 5
            homogeneous_component("243", 4) → words [[2,4,3],[4,2,3]]
        """
        return component_logic(word, rank)

    @mcp.tool()
    @log_tool_execution
    async def module_dimension(
        path: Optional[str] = None,
        word: Optional[Union[str, List[int]]] = None,
        rank: Optional[int] = None,
    ) -> Dict[str, Any]:
        """
        Dimension of the homogeneous module of a Dyck path (or of a fully commutative word).

        Give either path, or word together with rank.

        Returns:
            Dictionary with:
            - value: the dimension as a decimal string
            - method: "formula", "reverse", "inverse" or "exhaustive"
            - p_values: hook values {i, m, p} when a formula decided it
            - path, statistic

        Examples:
            module_dimension(path="UUUUDDUDDUDD") → value "16", method "formula"
        """
        return dimension_logic(path=path, word=word, rank=rank)

    @mcp.tool()
    @log_tool_execution
    async def verify_klr_relations(
        rank: int, height: Optional[int] = None, orientation: Optional[str] = None
    ) -> Dict[str, Any]:
        """
        Check the ten KLR defining relations on every homogeneous module of a rank.

        Args:
            rank: n >= 1
            height: only components with this many letters (default: all)
            orientation: "right", "left", or one '>'/'<' per diagram edge

        Returns:
            Dictionary with the component count, per-relation pass/fail and check counts,
            the single-degree verdict and any failing reports with witnesses
        """
        return verify_logic(rank, height, orientation)

    @mcp.tool()
    @log_tool_execution
    async def dimension_method_census(rank: int) -> Dict[str, Any]:
        """
        How many fully commutative elements of a rank get their dimension from each method.

        Returns:
            Dictionary with rank, total and methods {formula, reverse, inverse, exhaustive}
        """
        return census_logic(rank)
