"""
Parsed multi-output circuit.
"""

from dataclasses import dataclass, field
from typing import List

from bdd.manager import FuncHandle, Manager


@dataclass
class CircuitSpec:
    """Named inputs and outputs with one BDD per output over a shared manager."""

    name: str
    inputs: List[str]
    outputs: List[str]
    functions: List[FuncHandle]
    manager: Manager
    source_format: str
    warnings: List[str] = field(default_factory=list)

    def __post_init__(self):
        if len(set(self.inputs)) != len(self.inputs):
            raise ValueError(f"duplicate input names in {self.name}")
        if len(self.outputs) != len(self.functions):
            raise ValueError(f"{len(self.outputs)} output names for {len(self.functions)} functions")
        if self.manager.n != len(self.inputs):
            raise ValueError(f"manager has {self.manager.n} variables, {len(self.inputs)} inputs declared")
        if any(f.manager is not self.manager for f in self.functions):
            raise ValueError("every output must live in the circuit's manager")

    @property
    def n(self) -> int:
        return len(self.inputs)

    def __str__(self) -> str:
        return f"{self.name} ({self.source_format}, {len(self.inputs)}/{len(self.outputs)})"
