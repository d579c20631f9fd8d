from dataclasses import asdict, dataclass


@dataclass
class RecursionStats:
    """Counters collected while evaluating the recursion.

    `splits_enumerated` counts the partial assignments visited by the pruned
    split walk; `splits_surviving` the complete splits it yielded.
    """

    nodes: int = 0
    cache_hits: int = 0
    splits_enumerated: int = 0
    splits_surviving: int = 0
    unary_dropped: int = 0
    wall_time: float = 0.0

    def merge(self, other: "RecursionStats") -> None:
        """Add another run's counters; wall time is not summed."""
        self.nodes += other.nodes
        self.cache_hits += other.cache_hits
        self.splits_enumerated += other.splits_enumerated
        self.splits_surviving += other.splits_surviving
        self.unary_dropped += other.unary_dropped

    def counters(self) -> dict[str, int]:
        """All counters except timing, for comparing runs."""
        data = asdict(self)
        data.pop("wall_time")
        return data

    def to_dict(self) -> dict[str, float]:
        return asdict(self)
