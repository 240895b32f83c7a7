from enum import Enum
from typing import Any, Iterable, Mapping, Optional, Sequence

import orjson
import typer
from rich.console import Console
from rich.table import Table

JSON_OPTIONS = orjson.OPT_SORT_KEYS | orjson.OPT_INDENT_2


class OutputFormat(str, Enum):
    JSON = "json"
    TABLE = "table"


def render_json(payload: Any) -> str:
    return orjson.dumps(payload, option=JSON_OPTIONS).decode()


def mapping_table(title: str, mapping: Mapping[str, Any]) -> Table:
    table = Table(title=title)
    table.add_column("field", style="cyan")
    table.add_column("value")
    for key, value in mapping.items():
        table.add_row(key, _cell(value))
    return table


def rows_table(title: str, columns: Sequence[str], rows: Iterable[Sequence[Any]]) -> Table:
    table = Table(title=title)
    for column in columns:
        table.add_column(column)
    for row in rows:
        table.add_row(*(_cell(value) for value in row))
    return table


def _cell(value: Any) -> str:
    if isinstance(value, (list, tuple)):
        return ", ".join(_cell(v) for v in value)
    if isinstance(value, dict):
        return render_json(value).replace("\n", " ")
    if value is None:
        return "-"
    return str(value)


def emit(payload: Any, output: OutputFormat, table: Optional[Table] = None) -> None:
    """JSON goes through typer.echo so output is byte-stable; tables go to a rich console."""
    if output is OutputFormat.TABLE and table is not None:
        Console().print(table)
        return
    typer.echo(render_json(payload))
