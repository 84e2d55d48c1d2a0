from dataclasses import dataclass, replace


@dataclass(frozen=True)
class Budget:
    """Caps on every exhaustive search. Exceeding one raises BudgetExceeded."""

    map_cap: int = 5_000_000
    open_cap: int = 2_000_000
    normal_pair_cap: int = 1 << 22
    power_cap: int = 50_000
    cover_node_cap: int = 5_000_000

    def scaled(self, factor):
        return replace(
            self,
            map_cap=int(self.map_cap * factor),
            open_cap=int(self.open_cap * factor),
            cover_node_cap=int(self.cover_node_cap * factor),
        )


DEFAULT_BUDGET = Budget()
