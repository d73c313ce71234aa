from collections import OrderedDict
from typing import Optional, Union

from ggraph.components.analysis.measures import analyze, analyze_blowup
from ggraph.components.graphs.constructors import DIFFERENCE_KINDS, build_graph, class_graph
from ggraph.components.graphs.graph import Graph
from ggraph.components.groups.builders import GroupBuilder
from ggraph.components.groups.cyclic_lattice import CyclicLattice
from ggraph.components.groups.finite_group import FiniteGroup
from ggraph.config.config import Config
from ggraph.logger_manager import LoggerManager
from ggraph.models.analysis_result import AnalysisResult
from ggraph.models.group_spec import GroupSpec

logging = LoggerManager.get_logger(__name__)


class GraphService:
    """
    Builds groups, their cyclic lattices and graphs by spec string, keeping the
    most recent `cache_size` lattices so several claims can share one sweep.
    """

    def __init__(self, config: Optional[Config] = None, cache_size: int = 64):
        self.config = config or Config()
        self.builder = GroupBuilder(self.config)
        self.cache_size = cache_size
        self._lattices: "OrderedDict[str, CyclicLattice]" = OrderedDict()

    def lattice(self, spec: Union[str, GroupSpec]) -> CyclicLattice:
        key = str(spec)
        if key in self._lattices:
            self._lattices.move_to_end(key)
            return self._lattices[key]
        lattice = CyclicLattice(self.builder.build(spec))
        self._lattices[key] = lattice
        if len(self._lattices) > self.cache_size:
            self._lattices.popitem(last=False)
        return lattice

    def group(self, spec: Union[str, GroupSpec]) -> FiniteGroup:
        return self.lattice(spec).group

    def graph(self, spec: Union[str, GroupSpec], kind: str, level: str = "element") -> Graph:
        lattice = self.lattice(spec)
        if level == "class":
            return class_graph(lattice, kind)
        return build_graph(lattice, kind, self.config.vertex_cap)

    def analyze(self, spec: Union[str, GroupSpec], kind: str) -> AnalysisResult:
        """
        Element-level measurements. Difference kinds are measured from the
        class quotient; the parent graphs are materialised when within the cap.
        """
        lattice = self.lattice(spec)
        if kind in DIFFERENCE_KINDS:
            result = analyze_blowup(class_graph(lattice, kind))
        else:
            result = analyze(build_graph(lattice, kind, self.config.vertex_cap))
        logging.debug(
            f"📏 {lattice.group.name} {kind}: n={result.n}, components={len(result.components)}, "
            f"diameter={result.diameter}"
        )
        return result

    def clear(self):
        self._lattices.clear()
