"""
Result Formatter Service

Renders trees, complexes, Hasse diagrams, signatures and verification reports
as JSON, Graphviz DOT source or plain-text tables. Every rendering is
deterministic so that command output is byte-stable.
"""

import json
import logging
from dataclasses import dataclass
from typing import Any, Dict, Iterable, List, Optional

import graphviz

from src.models.tree import PointedTree
from src.models.complex import CellComplex
from src.models.reconstruction import Signature
from src.models.report import VerificationReport
from src.schemas import ReportDocument, signature_to_document, report_to_document
from src.repositories import TreeRepository, ComplexRepository
from src.repositories.base_repository import BaseRepository
from src.services.reconstruction import hasse
from src.services.tree_model import classify_vertex

logger = logging.getLogger(__name__)

FORMAT_JSON = "json"
FORMAT_DOT = "dot"
FORMAT_TABLE = "table"
FORMATS = (FORMAT_JSON, FORMAT_DOT, FORMAT_TABLE)


@dataclass
class FormattedResult:
    """Rendered command output"""
    text: str


def _json_text(payload: Any) -> str:
    return json.dumps(payload, indent=2, sort_keys=True) + "\n"


class ResultFormatter:
    """
    Formats library results for the command line
    """

    def __init__(self):
        self.trees = TreeRepository()
        self.complexes = ComplexRepository()
        self.reports = BaseRepository(ReportDocument)

    def format_tree(self, t, fmt: str = FORMAT_JSON) -> FormattedResult:
        """
        Format a pointed or free tree

        Args:
            t: PointedTree or Tree
            fmt: json, dot or table

        Returns:
            FormattedResult with the rendered tree
        """
        if fmt == FORMAT_DOT:
            return FormattedResult(self.tree_dot(t))
        if fmt == FORMAT_TABLE:
            return FormattedResult(self._tree_table(t))
        return FormattedResult(self.trees.render(t))

    def tree_dot(self, t) -> str:
        """Undirected DOT source; the basepoint is drawn as a double circle."""
        tree = t.tree if isinstance(t, PointedTree) else t
        dot = graphviz.Graph("tree")
        dot.attr("node", shape="circle")
        for v in sorted(tree.vertices):
            if isinstance(t, PointedTree) and v == t.basepoint:
                dot.node(v, shape="doublecircle")
            else:
                dot.node(v)
        for u, v in tree.sorted_edges():
            dot.edge(u, v)
        return dot.source

    def _tree_table(self, t) -> str:
        """One line per vertex with its order and point type; the basepoint is starred."""
        pointed = t if isinstance(t, PointedTree) else PointedTree(t, min(t.vertices))
        lines = ["vertex\torder\ttype"]
        for v in sorted(pointed.vertices):
            marker = " *" if isinstance(t, PointedTree) and v == t.basepoint else ""
            vertex_class = classify_vertex(v, pointed)
            lines.append(f"{v}{marker}\t{vertex_class.order}\t{vertex_class.kind.value}")
        return "\n".join(lines) + "\n"

    def format_complex(self, c: CellComplex, fmt: str = FORMAT_JSON, with_hasse: bool = False) -> FormattedResult:
        """Complex JSON, the Hasse diagram alone for dot, or a cell table."""
        if fmt == FORMAT_DOT:
            return FormattedResult(self.hasse_dot(c))
        if fmt == FORMAT_TABLE:
            text = self._complex_table(c)
        else:
            text = self.complexes.render(c)
        if with_hasse:
            text += self.hasse_dot(c)
        return FormattedResult(text)

    def hasse_dot(self, c: CellComplex) -> str:
        """Covering pairs only; nodes carry their dimension, arrows the added vertex order."""
        diagram = hasse(c)
        dot = graphviz.Digraph("hasse")
        dot.attr(rankdir="BT")
        for node in diagram.nodes:
            dot.node(str(node), label=f"U{node}\\ndim {c.cells[node].dimension}")
        for (lower, upper), label in sorted(diagram.covers.items()):
            dot.edge(str(lower), str(upper), label=str(label))
        return dot.source

    def _complex_table(self, c: CellComplex) -> str:
        lines = [
            f"ord(p) = {c.basepoint_order}, attached arcs = {c.attached}, cells = {len(c.cells)}",
            "cell\tdim\tsubtree",
        ]
        for index, cell in enumerate(c.cells):
            subtree = "-" if cell.subtree is None else " ".join(f"{u}-{v}" for u, v in cell.subtree.sorted_edges())
            lines.append(f"{index}\t{cell.dimension}\t{subtree or '{p}'}")
        lines.append("cell\tcell\tintersection dim")
        lines.extend(f"{i}\t{j}\t{dim}" for i, j, dim in c.pairs())
        return "\n".join(lines) + "\n"

    def format_comparison(
        self,
        first: Signature,
        second: Signature,
        fmt: str = FORMAT_JSON
    ) -> FormattedResult:
        verdict = "equivalent" if first == second else "distinct"
        if fmt == FORMAT_TABLE:
            text = (
                f"{verdict}\n"
                f"first\t{first.basepoint_order}\t{first.attached_count}\t{first.code}\n"
                f"second\t{second.basepoint_order}\t{second.attached_count}\t{second.code}\n"
            )
            return FormattedResult(text)
        payload = {
            "result": verdict,
            "signatures": [signature_to_document(s).model_dump() for s in (first, second)],
        }
        return FormattedResult(_json_text(payload))

    def format_kx(self, kx: int, degree: int, fmt: str = FORMAT_JSON) -> FormattedResult:
        if fmt == FORMAT_TABLE:
            return FormattedResult(f"kx_size\thomogeneity_degree\n{kx}\t{degree}\n")
        payload = {"kx_size": kx, "homogeneity_degree": degree, "equal": kx == degree}
        return FormattedResult(_json_text(payload))

    def format_enumeration(self, items: Iterable, fmt: str = FORMAT_JSON) -> FormattedResult:
        """One document per tree; json emits a list, table one edge listing per line."""
        rendered: List[Dict[str, Any]] = []
        lines: List[str] = []
        for item in items:
            tree = item.tree if isinstance(item, PointedTree) else item
            basepoint: Optional[str] = item.basepoint if isinstance(item, PointedTree) else None
            if fmt == FORMAT_TABLE:
                edges = " ".join(f"{u}-{v}" for u, v in tree.sorted_edges())
                lines.append(f"{len(tree.edges)}\t{basepoint or '-'}\t{edges}")
            else:
                rendered.append(json.loads(self.trees.render(item)))
        if fmt == FORMAT_TABLE:
            return FormattedResult("edges\tbasepoint\ttree\n" + "".join(line + "\n" for line in lines))
        logger.debug(f"Rendered {len(rendered)} enumerated trees")
        return FormattedResult(_json_text(rendered))

    def format_report(self, report: VerificationReport, fmt: str = FORMAT_JSON) -> FormattedResult:
        """
        Format a verification report

        The table lists one check per line with its instance and failure counts;
        the first counterexample of each failing check follows the table.
        """
        if fmt != FORMAT_TABLE:
            return FormattedResult(self.reports.dump(report_to_document(report)))

        width = max([len(check.name) for check in report.checks] + [len("check")])
        lines = [f"{'check'.ljust(width)}  instances  failures  status"]
        for check in report.checks:
            status = "ok" if check.passed else "FAILED"
            lines.append(f"{check.name.ljust(width)}  {check.instances:>9}  {check.failures:>8}  {status}")
        for key in sorted(report.notes):
            lines.append(f"{key}: {report.notes[key]}")
        lines.append(f"scope: {report.scope} edges, {'passed' if report.passed else 'failed'}")
        for check in report.checks:
            if check.counterexample is not None:
                lines.append(f"counterexample for {check.name}:")
                lines.append(json.dumps(check.counterexample, sort_keys=True))
        return FormattedResult("\n".join(lines) + "\n")
