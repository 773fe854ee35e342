from rich import box
from rich.console import Console
from rich.panel import Panel
from rich.table import Table
from rich.text import Text
from rich.theme import Theme

from verification.report import SuiteReport, VerificationReport

CRYSTAL_THEME = Theme(
    {
        # General
        "info": "cyan",
        "warning": "yellow",
        "error": "bright_red bold",
        "success": "green",
        "dim": "dim",
        "muted": "grey50",
        "border": "grey35",
        "highlight": "bold cyan",
        # Report modes
        "mode.exact": "bright_white",
        "mode.symbolic": "bright_magenta",
        "mode.sampled": "bright_blue",
        "code": "white",
    }
)

_console: Console | None = None


def get_console() -> Console:
    """The shared stderr console; stdout carries reports only."""
    global _console
    if _console is None:
        _console = Console(theme=CRYSTAL_THEME, highlight=False, stderr=True)

    return _console


def _outcome(report: VerificationReport) -> Text:
    if report.passed:
        return Text("pass", style="success")
    if report.informational:
        return Text("fail (informational)", style="warning")
    return Text("FAIL", style="error")


def render_suite(suite: SuiteReport, console: Console | None = None) -> None:
    console = console or get_console()
    table = Table(
        title=Text(f"suite {suite.suite}", style="highlight"),
        box=box.ROUNDED,
        border_style="border",
        title_justify="left",
    )
    table.add_column("identity", style="code", overflow="fold")
    table.add_column("mode", no_wrap=True)
    table.add_column("samples", justify="right", style="muted")
    table.add_column("outcome", no_wrap=True)

    for report in suite.reports:
        samples = str(report.samples) if report.samples else "-"
        table.add_row(
            report.identity,
            Text(report.mode.value, style=f"mode.{report.mode.value}"),
            samples,
            _outcome(report),
        )

    console.print(table)

    for finding in suite.findings:
        body = "\n".join([finding.summary, ""] + [f"{k}: {v}" for k, v in sorted(finding.details.items())])
        console.print(
            Panel(
                Text(body, style="code"),
                title=Text(f"finding {finding.key}", style="warning"),
                title_align="left",
                border_style="border",
                box=box.ROUNDED,
                padding=(0, 1),
            )
        )

    verdict = Text("all checks passed", style="success") if suite.passed else Text(
        "verification failed", style="error"
    )
    console.print(verdict)


def render_counterexamples(report: VerificationReport, console: Console | None = None) -> None:
    console = console or get_console()
    table = Table.grid(padding=(0, 1))
    table.add_column(style="muted", justify="right", no_wrap=True)
    table.add_column(style="code", overflow="fold")
    for example in report.counterexamples:
        if example.label:
            table.add_row("label", example.label)
        if example.point:
            table.add_row("point", ", ".join(f"{k}={v}" for k, v in example.point.items()))
        table.add_row("lhs", example.lhs)
        table.add_row("rhs", example.rhs)
    console.print(Panel(table, title=Text(report.identity, style="error"), title_align="left", border_style="border"))
