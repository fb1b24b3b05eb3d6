from typing import List, Literal, Optional, Sequence, Tuple, TypedDict, Unpack

from ...domain.aggs import (
    ConfusionMatrix,
    CueChart,
    EvalReport,
    SearchResult,
    Violation,
    VowelAllocation,
    VowelSummary,
)
from ...domain.constants import POSITION_NAMES, POSITIONS
from ...domain.optimizer import format_trace
from ...domain.ports import Interface as DomainInterface
from ...lib.utils import pipe


class DisplaySettings(TypedDict, total=False):
    box_style: Literal["single", "double", "rounded"]
    color: Literal[
        "red",
        "green",
        "yellow",
        "blue",
        "magenta",
        "cyan",
        "white",
        "bright_yellow",
        "bright_red",
        "bright_green",
        "bright_magenta",
    ]
    title: str
    padding: Tuple[int, int]


def _plain_make_box(content: str, title: Optional[str] = None, width: int = 70) -> str:
    """Simple ASCII box around content, the dependency-free stand-in for a panel."""
    lines = content.split("\n")

    top_border = "+" + "-" * (width - 2) + "+"
    if title:
        title_str = f" {title} "
        padding = (width - 2 - len(title_str)) // 2
        top_border = (
            "+"
            + "-" * padding
            + title_str
            + "-" * (width - 2 - padding - len(title_str))
            + "+"
        )
    bottom_border = "+" + "-" * (width - 2) + "+"

    boxed_lines = [top_border]
    for line in lines:
        if len(line) > width - 4:
            line = line[: width - 7] + "..."
        boxed_lines.append(f"| {line:<{width - 4}} |")
    boxed_lines.append(bottom_border)
    return "\n".join(boxed_lines)


def report_rows(
    report: EvalReport, alloc: Optional[VowelAllocation] = None
) -> List[Tuple[str, str, str, str, str]]:
    rows: List[Tuple[str, str, str, str, str]] = []
    for p in POSITIONS:
        score = report.per_position.get(p)
        if score is None:
            continue
        vowels = " ".join(alloc.members(p)) if alloc is not None else ""
        rows.append((p, POSITION_NAMES[p], vowels, f"{score.mean:.2f}", f"{score.std:.2f}"))
    rows.append(("average", "", "", f"{report.average:.2f}", ""))
    return rows


def chart_lines(chart: CueChart) -> List[str]:
    lines = ["Handshapes (consonants)"]
    lines.extend(f"  {int(h)}: {' '.join(units)}" for h, units in chart.handshapes)
    lines.append(f"  isolated vowels: handshape {int(chart.isolated_vowel_handshape)}")
    lines.append("Positions (vowels)")
    lines.extend(f"  {p} {name}: {' '.join(vowels)}" for p, name, vowels in chart.positions)
    lines.append("Tones (head movement)")
    lines.extend(f"  {tone}: {move} ({desc})" for tone, move, desc in chart.tones)
    return lines


def _plain_table(header: Sequence[str], rows: Sequence[Sequence[str]]) -> str:
    widths = [
        max(len(str(r[i])) for r in [header, *rows]) for i in range(len(header))
    ]
    return "\n".join(
        "  ".join(str(cell).ljust(w) for cell, w in zip(row, widths)).rstrip()
        for row in [header, *rows]
    )


_REPORT_HEADER = ("position", "name", "vowels", "mean %", "std %")


def confusion_rows(matrix: ConfusionMatrix) -> List[Tuple[str, ...]]:
    """One row per spoken vowel: percent of its test frames given to each vowel."""
    return [
        (spoken, *(f"{matrix.rate(spoken, chosen):.1f}" for chosen in matrix.vowels))
        for spoken in matrix.vowels
    ]


def summary_rows(summaries: Sequence[VowelSummary]) -> List[Tuple[str, str, str, str, str, str]]:
    return [
        (
            s.vowel,
            str(s.frames),
            f"{s.mu[0]:.2f}",
            f"{s.mu[1]:.2f}",
            f"{s.sigma[0, 0]:.3f} {s.sigma[0, 1]:.3f}",
            f"{s.sigma[1, 0]:.3f} {s.sigma[1, 1]:.3f}",
        )
        for s in summaries
    ]


_SUMMARY_HEADER = ("vowel", "frames", "mu A", "mu B", "sigma row 1", "sigma row 2")


class PlainTextInterface(DomainInterface):
    @staticmethod
    def is_available() -> bool:
        return True

    def display(self, message: str, **kwargs: Unpack[DisplaySettings]) -> None:
        title = kwargs.get("title")
        if title or kwargs.get("box_style"):
            print(_plain_make_box(message, title))
            print()
        else:
            print(message)

    def display_report(
        self,
        title: str,
        report: EvalReport,
        alloc: Optional[VowelAllocation] = None,
        **kwargs: Unpack[DisplaySettings],
    ) -> None:
        kwargs["title"] = title
        self.display(_plain_table(_REPORT_HEADER, report_rows(report, alloc)), **kwargs)

    def display_search(self, result: SearchResult, **kwargs: Unpack[DisplaySettings]) -> None:
        trace = format_trace(result) or ["no improving swap"]
        body = "\n".join(
            [*trace, "", f"evaluated vowel groups: {result.evaluations}"]
        )
        self.display(body, **kwargs)

    def display_violations(
        self, title: str, violations: Sequence[Violation], **kwargs: Unpack[DisplaySettings]
    ) -> None:
        kwargs["title"] = title
        body = "\n".join(f"! {v}" for v in violations) if violations else "+ no violations"
        self.display(body, **kwargs)

    def display_confusion(
        self,
        title: str,
        matrix: ConfusionMatrix,
        summaries: Sequence[VowelSummary] = (),
        **kwargs: Unpack[DisplaySettings],
    ) -> None:
        kwargs["title"] = title
        parts = [
            _plain_table(("spoken", *matrix.vowels), confusion_rows(matrix)),
            f"accuracy {matrix.accuracy:.2f}% over {matrix.total} test frames",
        ]
        if summaries:
            parts.append(_plain_table(_SUMMARY_HEADER, summary_rows(summaries)))
        self.display("\n\n".join(parts), **kwargs)

    def display_chart(self, chart: CueChart, **kwargs: Unpack[DisplaySettings]) -> None:
        self.display("\n".join(chart_lines(chart)), **kwargs)


def _make_panel(content: "object", **kwargs: Unpack[DisplaySettings]):
    from rich import box
    from rich.panel import Panel

    box_map = {"single": box.SQUARE, "double": box.DOUBLE, "rounded": box.ROUNDED}
    chosen = pipe(
        kwargs.get("box_style"),
        box_map.get,
        lambda b: b or box.ROUNDED,
    )
    return Panel(
        content,  # type: ignore[arg-type]
        border_style=kwargs.get("color") or "white",
        box=chosen,
        title=kwargs.get("title"),
        padding=kwargs.get("padding") or (0, 1),
    )


class RichTextInterface(DomainInterface):
    @staticmethod
    def is_available() -> bool:
        try:
            from rich.console import Console  # type: ignore
            from rich.table import Table  # type: ignore

            return True
        except ImportError:
            return False

    def display(self, message: str, **kwargs: Unpack[DisplaySettings]) -> None:
        from rich.console import Console
        from rich.text import Text

        console = Console()
        if kwargs.get("title") or kwargs.get("box_style"):
            console.print(_make_panel(Text(message), **kwargs))
        else:
            console.print(Text(message))

    def _print_table(
        self, header: Sequence[str], rows: Sequence[Sequence[str]], **kwargs: Unpack[DisplaySettings]
    ) -> None:
        from rich.console import Console
        from rich.table import Table

        table = Table(show_edge=False, header_style="bold")
        for i, name in enumerate(header):
            table.add_column(name, justify="right" if i >= 3 else "left")
        for row in rows:
            table.add_row(*row, style="bold" if row[0] == "average" else None)
        Console().print(_make_panel(table, **kwargs))

    def display_report(
        self,
        title: str,
        report: EvalReport,
        alloc: Optional[VowelAllocation] = None,
        **kwargs: Unpack[DisplaySettings],
    ) -> None:
        kwargs["title"] = title
        self._print_table(_REPORT_HEADER, report_rows(report, alloc), **kwargs)

    def display_search(self, result: SearchResult, **kwargs: Unpack[DisplaySettings]) -> None:
        rows = [
            (str(i), str(step.move), f"{step.delta:+.4f}", f"{step.score:.2f}")
            for i, step in enumerate(result.trace, start=1)
        ]
        if not rows:
            self.display("no improving swap", **kwargs)
            return
        self._print_table(("step", "swap", "delta", "score"), rows, **kwargs)

    def display_violations(
        self, title: str, violations: Sequence[Violation], **kwargs: Unpack[DisplaySettings]
    ) -> None:
        kwargs["title"] = title
        if not violations:
            self.display("no violations", **kwargs)
            return
        self._print_table(
            ("kind", "subjects", "message"),
            [(v.kind, " ".join(v.subjects), v.message) for v in violations],
            **kwargs,
        )

    def display_confusion(
        self,
        title: str,
        matrix: ConfusionMatrix,
        summaries: Sequence[VowelSummary] = (),
        **kwargs: Unpack[DisplaySettings],
    ) -> None:
        from rich.console import Console, Group
        from rich.table import Table
        from rich.text import Text

        kwargs["title"] = title
        grid = Table(show_edge=False, header_style="bold")
        grid.add_column("spoken \\ chosen %")
        for v in matrix.vowels:
            grid.add_column(v, justify="right")
        for row in confusion_rows(matrix):
            grid.add_row(*row)

        parts: List[object] = [
            grid,
            Text(f"accuracy {matrix.accuracy:.2f}% over {matrix.total} test frames"),
        ]
        if summaries:
            fitted = Table(show_edge=False, header_style="bold")
            for i, name in enumerate(_SUMMARY_HEADER):
                fitted.add_column(name, justify="left" if i == 0 else "right")
            for row in summary_rows(summaries):
                fitted.add_row(*row)
            parts.append(fitted)
        Console().print(_make_panel(Group(*parts), **kwargs))  # type: ignore[arg-type]

    def display_chart(self, chart: CueChart, **kwargs: Unpack[DisplaySettings]) -> None:
        from rich.console import Console, Group
        from rich.table import Table

        hands = Table(title="Handshapes", show_edge=False)
        hands.add_column("#", justify="right")
        hands.add_column("consonants")
        for h, units in chart.handshapes:
            hands.add_row(str(int(h)), " ".join(units))
        hands.add_row("*", f"isolated vowels use {int(chart.isolated_vowel_handshape)}")

        positions = Table(title="Positions", show_edge=False)
        positions.add_column("position")
        positions.add_column("vowels")
        for p, name, vowels in chart.positions:
            positions.add_row(f"{p} {name}", " ".join(vowels))

        tones = Table(title="Tones", show_edge=False)
        tones.add_column("tone", justify="right")
        tones.add_column("head")
        for tone, move, desc in chart.tones:
            tones.add_row(str(tone), f"{move}: {desc}")

        Console().print(_make_panel(Group(hands, positions, tones), **kwargs))
