"""
Artifact writers: CSV (17 significant digits), JSON with the resolved config
embedded, and an optional gnuplot script next to the CSV.
"""
import json
import logging
from pathlib import Path
from typing import Dict, List, Optional, Tuple

import pandas as pd

from ..settings import scalewave_settings
from ..wave_models.run_config import CommandName, RunConfig

logger = logging.getLogger(__name__)

# (x column, y columns) of the default plot per command
PLOT_COLUMNS: Dict[CommandName, Tuple[str, List[str]]] = {
    CommandName.EVAL_KERNEL: ('y', ['E']),
    CommandName.SOLVE: ('x1', ['u']),
    CommandName.COMPARE_ORACLE: ('x1', ['u_formula', 'u_oracle']),
    CommandName.HUYGENS_SCAN: ('r', ['abs_u']),
    CommandName.PROPERTY_SUITE: ('index', ['max_error']),
}


def write_csv(table: pd.DataFrame, path: Path) -> Path:
    digits = scalewave_settings.CSV_SIGNIFICANT_DIGITS
    table.to_csv(path, index=False, float_format=f"%.{digits}g")
    logger.info("wrote %d rows to %s", len(table), path)
    return path


def _json_rows(table: pd.DataFrame) -> List[dict]:
    cleaned = table.astype(object).where(table.notna(), None)
    return cleaned.to_dict(orient="records")


def write_json(table: pd.DataFrame, config: RunConfig, path: Path, summary: Optional[dict] = None) -> Path:
    payload = {
        "config": json.loads(config.json()),
        "columns": list(table.columns),
        "rows": _json_rows(table),
        "summary": summary or {},
    }
    with open(path, "w", encoding="utf-8") as f:
        json.dump(payload, f, indent=2, sort_keys=True)
        f.write("\n")
    logger.info("wrote %d rows to %s", len(table), path)
    return path


def write_gnuplot(csv_path: Path, command: CommandName, columns: List[str]) -> Optional[Path]:
    x_col, y_cols = PLOT_COLUMNS[command]
    if x_col != 'index' and x_col not in columns:
        return None
    x_using = "0" if x_col == 'index' else str(columns.index(x_col) + 1)
    plots = [
        f'"{csv_path.name}" every ::1 using {x_using}:{columns.index(y) + 1} with linespoints title "{y}"'
        for y in y_cols if y in columns
    ]
    if not plots:
        return None
    script = "\n".join([
        'set datafile separator ","',
        f'set xlabel "{x_col}"',
        "plot " + ", \\\n     ".join(plots),
        "",
    ])
    path = csv_path.with_suffix(".gp")
    path.write_text(script, encoding="utf-8")
    logger.info("wrote plot script %s", path)
    return path
