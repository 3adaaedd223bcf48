"""Problem instances: parsing, validation and serialization.

An instance is an ordered collection of non-empty strings together with a
non-negative mismatch budget ``k``.  The solver searches for the shortest
string that contains every input exactly, except for one designated input
that may disagree with it in at most ``k`` positions.  For the problem to be
well posed no input string may occur as a substring of another (this also
rules out duplicates).

The text format is one string per line; lines starting with ``#`` are
comments and blank lines are skipped.  Symbols are arbitrary code points,
compared exactly.
"""

from __future__ import annotations

from dataclasses import dataclass, field

# The subset tables downstream grow as n * 2^n entries, so refuse instances
# that would silently allocate gigabytes.
DEFAULT_MAX_STRINGS = 20


class InstanceError(ValueError):
    """Input text or parameters cannot form an instance."""


class InvalidInstanceError(InstanceError):
    """An instance failed validation; carries the offending report."""

    def __init__(self, report: "ValidationReport"):
        super().__init__(f"invalid instance: {report.violations}")
        self.report = report


@dataclass(frozen=True)
class Instance:
    """An immutable problem instance (safe to share across threads)."""

    strings: tuple[str, ...]
    k: int

    @property
    def n(self) -> int:
        """Number of strings."""
        return len(self.strings)

    @property
    def c(self) -> int:
        """Length of the longest string."""
        return max(len(s) for s in self.strings)

    @property
    def total_len(self) -> int:
        """Sum of all string lengths."""
        return sum(len(s) for s in self.strings)


@dataclass
class ValidationReport:
    """Outcome of :func:`validate`: empty ``violations`` means valid.

    Each violation is a ``(kind, index_a, index_b)`` triple with kind one of
    ``substring`` (strings[index_a] occurs inside strings[index_b]; equal
    strings are reported this way too), ``duplicate`` or ``empty``.
    """

    violations: list[tuple[str, int, int]] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations


def make_instance(strings, k: int, *, max_strings: int = DEFAULT_MAX_STRINGS) -> Instance:
    """Build an Instance from an iterable of strings, checking cheap limits.

    Substring-freeness is deliberately not checked here; use :func:`validate`.
    """
    strings = tuple(strings)
    if k < 0:
        raise InstanceError("invalid budget")
    if not strings:
        raise InstanceError("no strings")
    if len(strings) > max_strings:
        raise InstanceError(
            f"too many strings: {len(strings)} > {max_strings} "
            f"(the subset tables grow as n * 2^n; raise max_strings to override)"
        )
    return Instance(strings=strings, k=k)


def parse_instance(text: str, k: int, *, max_strings: int = DEFAULT_MAX_STRINGS) -> Instance:
    """Parse the line-oriented text format into an Instance.

    One string per non-empty, non-comment line; ``#``-prefixed lines are
    ignored; trailing line terminators are stripped; order is preserved.
    """
    strings = []
    for line in text.splitlines():
        if not line or line.startswith("#"):
            continue
        strings.append(line)
    return make_instance(strings, k, max_strings=max_strings)


def serialize_instance(instance: Instance) -> str:
    """Render an instance back into the text format (one string per line)."""
    return "".join(s + "\n" for s in instance.strings)


def validate(instance: Instance) -> ValidationReport:
    """Report every containment violation in the instance.

    A direct substring scan is run for every ordered pair; equal strings show
    up as substring violations in both directions.
    """
    report = ValidationReport()
    strings = instance.strings
    for i, s in enumerate(strings):
        if not s:
            report.violations.append(("empty", i, i))
    for a, sa in enumerate(strings):
        for b, sb in enumerate(strings):
            if a != b and sa and sa in sb:
                report.violations.append(("substring", a, b))
    return report
