from typing import Any, Dict, List, Optional

from rich.box import ROUNDED
from rich.console import Console
from rich.panel import Panel
from rich.table import Table
from rich.text import Text


class DocumentGenerator:
    """
    A utility class for rendering reports on the terminal with the Rich library.

    Data cells are printed as plain text so that permutations and bases are never read as markup.
    """
    console = Console(highlight=False)
    WIDTH = 80
    PADDING = (0, 1)

    @staticmethod
    def section(title: str) -> None:
        """
        Display a section title in a panel. For example, "Bijection report".

        :param title: The title of the section.
        :type title: str
        """
        DocumentGenerator.console.print(Panel(
            Text(title, style="bold", justify="center"),
            box=ROUNDED,
            padding=DocumentGenerator.PADDING,
            width=DocumentGenerator.WIDTH
        ))

    @staticmethod
    def metric(label: str, value: Any) -> None:
        """
        Display a single metric. For example, result: pass.

        :param label: The label of the metric.
        :type label: str
        :param value: The value of the metric.
        :type value: Any
        """
        line = Text(f"{label}: ")
        line.append(str(value), style="bold")
        DocumentGenerator.console.print(line)

    @staticmethod
    def metrics_group(title: str, metrics: Dict[str, Any]) -> None:
        """Display a group of related metrics."""
        width = max(len(k) for k in metrics.keys())
        content = Text()
        for index, (key, value) in enumerate(metrics.items()):
            if index:
                content.append("\n")
            content.append(f"{key.ljust(width)}: ")
            content.append(str(value), style="bold")

        DocumentGenerator.console.print(Panel(
            content,
            title=Text(title, style="bold"),
            title_align="left",
            box=ROUNDED,
            padding=DocumentGenerator.PADDING,
            width=DocumentGenerator.WIDTH
        ))

    @staticmethod
    def table(headers: List[str], rows: List[List[Any]], title: Optional[str] = None) -> None:
        """
        Display a table with optional title.

        :param headers: The headers of the table.
        :type headers: List[str]
        :param rows: The rows of the table.
        :type rows: List[List[Any]]
        :param title: The title of the table.
        :type title: Optional[str]
        """
        table = Table(
            box=ROUNDED,
            title=Text(title, style="bold") if title else None,
            show_header=True,
            header_style="bold",
            collapse_padding=True,
        )

        for header in headers:
            table.add_column(header, justify="right")

        for row in rows:
            table.add_row(*[Text(str(cell)) for cell in row])

        DocumentGenerator.console.print(table)
