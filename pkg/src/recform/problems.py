"""Problem files: the JSON input format plus the bundled worked examples.

A problem fixes the relation (gamma_0 first), the initial values, and a mode:
"family" expects k rows of k initial values, "cassini" expects a single row
and works with the sequence's own shifts.  Rationals travel as strings so
exactness survives serialization.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction

from .algebra import format_rat, parse_rat
from .recurrence import RecurrenceRelation, Sequence, SequenceFamily

MODES = ("family", "cassini")


@dataclass(frozen=True)
class Problem:
    k: int
    gammas: tuple[Fraction, ...]
    sequences: tuple[tuple[Fraction, ...], ...]
    mode: str = "family"

    def __post_init__(self):
        if self.mode not in MODES:
            raise ValueError(f"mode must be one of {MODES}, got {self.mode!r}")
        if len(self.gammas) != self.k:
            raise ValueError(f"expected {self.k} relation coefficients, got {len(self.gammas)}")
        expected_rows = 1 if self.mode == "cassini" else self.k
        if len(self.sequences) != expected_rows:
            raise ValueError(
                f"mode {self.mode!r} expects {expected_rows} sequence row(s), "
                f"got {len(self.sequences)}"
            )
        for row in self.sequences:
            if len(row) != self.k:
                raise ValueError(f"every sequence row needs {self.k} initial values")

    @classmethod
    def from_dict(cls, data: dict) -> "Problem":
        try:
            k = int(data["k"])
            gammas = tuple(parse_rat(x) for x in data["gammas"])
            sequences = tuple(tuple(parse_rat(x) for x in row) for row in data["sequences"])
        except (KeyError, TypeError) as exc:
            raise ValueError(f"malformed problem: {exc}") from exc
        return cls(k=k, gammas=gammas, sequences=sequences, mode=data.get("mode", "family"))

    @classmethod
    def from_json(cls, text: str) -> "Problem":
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ValueError(f"problem file is not valid JSON: {exc}") from exc
        if not isinstance(data, dict):
            raise ValueError("problem file must hold a JSON object")
        return cls.from_dict(data)

    def to_dict(self) -> dict:
        return {
            "k": self.k,
            "gammas": [format_rat(g) for g in self.gammas],
            "sequences": [[format_rat(x) for x in row] for row in self.sequences],
            "mode": self.mode,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)

    def relation(self) -> RecurrenceRelation:
        return RecurrenceRelation(self.gammas)

    def family(self) -> SequenceFamily:
        """The working family: given rows, or the shifts of the single sequence."""
        relation = self.relation()
        if self.mode == "cassini":
            return Sequence(relation, self.sequences[0]).shifted_family()
        return SequenceFamily(relation, self.sequences)

    def sequence(self, index: int) -> Sequence:
        """1-based access to an input sequence."""
        if not 1 <= index <= len(self.sequences):
            raise ValueError(f"sequence index must be in 1..{len(self.sequences)}")
        return Sequence(self.relation(), self.sequences[index - 1])


def _problem(k: int, gammas, sequences, mode: str = "family") -> Problem:
    return Problem(
        k=k,
        gammas=tuple(Fraction(g) for g in gammas),
        sequences=tuple(tuple(Fraction(x) for x in row) for row in sequences),
        mode=mode,
    )


# Worked examples shipped with the CLI and the service.  Order-2 rows follow
# the classical parametrization x_n = A x_{n-1} + B x_{n-2}, i.e. gammas=(B, A).
BUNDLED_PROBLEMS: dict[str, Problem] = {
    "fibonacci-lucas": _problem(2, (1, 1), [(0, 1), (2, 1)]),
    "table1-row1": _problem(2, (4, 0), [(1, 2), (2, 3)]),
    "table1-row2": _problem(2, (-1, 2), [(2, 3), (4, 5)]),
    "table1-row3": _problem(2, (-10, 7), [(0, 1), (2, 7)]),
    "table1-row4": _problem(2, (-10, 7), [(1, 2), (1, 5)]),
    "table1-row5": _problem(2, (-1, 4), [(1, 2), (3, 4)]),
    "narayana": _problem(3, (1, 0, 1), [(0, 1, 1), (3, 1, 1), (3, 0, 2)]),
    "tribonacci-cassini": _problem(3, (1, 1, 1), [(0, 0, 1)], mode="cassini"),
}


def load_problem(source: str) -> Problem:
    """Load from a bundled example name or a JSON file path."""
    if source in BUNDLED_PROBLEMS:
        return BUNDLED_PROBLEMS[source]
    try:
        with open(source, "r", encoding="utf-8") as fh:
            return Problem.from_json(fh.read())
    except FileNotFoundError:
        known = ", ".join(sorted(BUNDLED_PROBLEMS))
        raise ValueError(
            f"{source!r} is neither a readable file nor a bundled example ({known})"
        ) from None
