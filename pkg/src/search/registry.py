from typing import Callable, Dict, List, Optional
from dataclasses import dataclass

from src.search.models import Solution


# A phase maps (g, B, cap, workers) to the solutions it finds.
PhaseFunction = Callable[[int, int, int, int], List[Solution]]


@dataclass
class PhaseDefinition:
    """Definition of a search phase that search_base can run."""
    name: str
    description: str
    function: PhaseFunction
    order: int = 0
    min_base: int = 2


class PhaseRegistry:
    """Registry for the named search phases."""

    def __init__(self):
        self._phases: Dict[str, PhaseDefinition] = {}

    def register_phase(
        self,
        name: str,
        function: PhaseFunction,
        description: str,
        order: int = 0,
        min_base: int = 2,
    ) -> None:
        """Register a new phase, replacing any phase of the same name."""
        self._phases[name] = PhaseDefinition(
            name=name,
            description=description,
            function=function,
            order=order,
            min_base=min_base,
        )

    def get_phase(self, name: str) -> Optional[PhaseDefinition]:
        return self._phases.get(name)

    def list_phases(self) -> List[str]:
        """Phase names in execution order."""
        return [p.name for p in sorted(self._phases.values(), key=lambda p: (p.order, p.name))]

    def phases_for(self, names, g: int) -> List[PhaseDefinition]:
        """The selected phases applicable to base g, in execution order."""
        selected = [self.get_phase(name) for name in self.list_phases() if name in names]
        return [phase for phase in selected if g >= phase.min_base]


def search_phase(name: str = None, description: str = "", order: int = 0, min_base: int = 2):
    """Decorator registering a phase with the global registry."""
    def decorator(func: PhaseFunction):
        global_phase_registry.register_phase(
            name=name or func.__name__,
            function=func,
            description=description,
            order=order,
            min_base=min_base,
        )
        return func
    return decorator


# Global phase registry instance
global_phase_registry = PhaseRegistry()
