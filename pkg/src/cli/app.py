"""Command-line front end: search, bounds, oracle, census and analyze."""

from enum import Enum
from pathlib import Path
from typing import List, Optional, Sequence, Set, TextIO, Tuple
from math import comb
import csv
import sys

import click
import orjson
import typer
from loguru import logger
from pydantic import ValidationError

from config.settings import settings
from src.arith.bounds import bound_report, n3_cap
from src.arith.errors import CapacityError, InvalidArgumentError
from src.arith.numtheory import isqrt
from src.oracle.brute import brute_force, count_tilde_d1, verify_record
from src.search.analysis import classify_case
from src.search.core import search_base
from src.search.models import (
    ALL_PHASES,
    CSV_HEADER,
    PHASE_LARGE,
    PHASE_SMALL,
    OutputRecord,
    SearchConfig,
    Solution,
)
from src.sweep.certificates import CertificateStore, CompletionCertificate, certificate_path_for
from src.sweep.runner import search_range


EXIT_OK = 0
EXIT_INVALID = 1
EXIT_PARTIAL = 2

# (g, a, b, c) as written
RecordKey = Tuple[str, str, str, str]

app = typer.Typer(
    name="repdigit-triples",
    help="Diophantine triples whose pairwise products plus one are repdigits.",
    add_completion=False,
    pretty_exceptions_enable=False,
    no_args_is_help=True,
)


class OutputFormat(str, Enum):
    json = "json"
    csv = "csv"


class PhaseChoice(str, Enum):
    small = "small"
    large = "large"
    both = "both"

    def phases(self):
        if self is PhaseChoice.both:
            return ALL_PHASES
        return frozenset({PHASE_SMALL if self is PhaseChoice.small else PHASE_LARGE})


def parse_base_range(text: str) -> Tuple[int, int]:
    """Parse 'LO..HI' into an inclusive (lo, hi) pair."""
    lo_text, sep, hi_text = text.partition("..")
    try:
        if not sep:
            raise ValueError(text)
        lo, hi = int(lo_text), int(hi_text)
    except ValueError:
        raise typer.BadParameter(f"expected LO..HI, got {text!r}", param_hint="--base-range")
    if not 2 <= lo <= hi:
        raise typer.BadParameter(f"need 2 <= LO <= HI, got {text!r}", param_hint="--base-range")
    return lo, hi


class RecordWriter:
    """Writes solution records as JSON lines or CSV rows, skipping keys already written."""

    def __init__(
        self,
        stream: TextIO,
        fmt: OutputFormat,
        write_header: bool = True,
        written: Optional[Set[RecordKey]] = None,
    ):
        self.stream = stream
        self.fmt = fmt
        self.written: Set[RecordKey] = set(written or ())
        self._csv = csv.writer(stream, lineterminator="\n") if fmt is OutputFormat.csv else None
        if self._csv is not None and write_header:
            self._csv.writerow(CSV_HEADER)

    def write(self, solution: Solution) -> None:
        record = OutputRecord.from_solution(solution)
        key = (record.g, record.a, record.b, record.c)
        if key in self.written:
            return
        self.written.add(key)
        if self._csv is not None:
            self._csv.writerow(record.csv_row())
        else:
            self.stream.write(orjson.dumps(record.model_dump()).decode() + "\n")
        self.stream.flush()


def _written_keys(path: Path, fmt: OutputFormat) -> Set[RecordKey]:
    """Keys of the records already in an output file being resumed."""
    keys: Set[RecordKey] = set()
    with path.open("r", encoding="utf-8") as stream:
        if fmt is OutputFormat.csv:
            for row in csv.reader(stream):
                if len(row) >= 4 and row[:4] != CSV_HEADER[:4]:
                    keys.add(tuple(row[:4]))
            return keys
        for line in stream:
            try:
                data = orjson.loads(line)
                keys.add((data["g"], data["a"], data["b"], data["c"]))
            except (orjson.JSONDecodeError, KeyError, TypeError):
                continue
    return keys


def _emit_json(payload) -> None:
    typer.echo(orjson.dumps(payload).decode())


@app.command()
def search(
    base: Optional[int] = typer.Option(None, "--base", help="Single base G."),
    base_range: Optional[str] = typer.Option(None, "--base-range", help="Inclusive range LO..HI."),
    threshold: Optional[int] = typer.Option(None, "--threshold", help="Phase threshold B."),
    n3_cap_override: Optional[int] = typer.Option(None, "--n3-cap", help="Override the per-base n3 cap."),
    phase: PhaseChoice = typer.Option(PhaseChoice.both, "--phase"),
    workers: Optional[int] = typer.Option(None, "--workers", help="Worker processes."),
    fmt: OutputFormat = typer.Option(OutputFormat.json, "--format"),
    out: Optional[Path] = typer.Option(None, "--out", help="Output file (default stdout)."),
    progress: bool = typer.Option(False, "--progress", help="Progress bar on stderr."),
    force: bool = typer.Option(False, "--force", help="Ignore existing completion certificates."),
):
    """Search one base or a range of bases."""
    if (base is None) == (base_range is None):
        raise typer.BadParameter("give exactly one of --base or --base-range")
    lo, hi = (base, base) if base is not None else parse_base_range(base_range)
    if lo < 2:
        raise typer.BadParameter(f"base must be >= 2, got {lo}", param_hint="--base")

    config = SearchConfig(
        threshold_B=threshold,
        n3_cap_override=n3_cap_override,
        phases=phase.phases(),
        workers=workers if workers is not None else settings.workers,
        emit_progress=progress,
    )
    phases = sorted(config.phases)

    def cap_for(g: int) -> int:
        return config.n3_cap_override if config.n3_cap_override is not None else n3_cap(g)

    store = None
    skip: List[int] = []
    if out is not None:
        store = CertificateStore(certificate_path_for(str(out)))
        if not force:
            skip = [
                g for g in range(lo, hi + 1)
                if store.is_complete(g, config.threshold_for(g), cap_for(g), phases)
            ]

    resume = out is not None and not force and out.exists() and out.stat().st_size > 0
    # records of a base whose certificate never landed may already be present
    written = _written_keys(out, fmt) if resume else set()
    stream = out.open("a" if resume else "w", encoding="utf-8") if out is not None else sys.stdout
    failures = 0
    try:
        writer = RecordWriter(stream, fmt, write_header=not resume, written=written)
        for result in search_range(lo, hi, config, skip=skip):
            if not result.ok:
                failures += 1
                typer.echo(f"g={result.g}: {result.error}", err=True)
                continue
            for solution in result.solutions:
                writer.write(solution)
            if store is not None:
                store.store_certificate(
                    CompletionCertificate(
                        g=result.g,
                        threshold=result.threshold,
                        n3_cap=result.n3_cap,
                        phases=phases,
                        solutions=len(result.solutions),
                        wall_time=result.wall_time,
                    )
                )
    finally:
        if out is not None:
            stream.close()

    if failures:
        logger.warning(f"{failures} base(s) failed")
        raise typer.Exit(code=EXIT_PARTIAL)


@app.command()
def bounds(base: int = typer.Option(..., "--base", help="Base G >= 3.")):
    """Print the effective bounds for one base as JSON."""
    _emit_json(bound_report(base).to_dict())


@app.command()
def oracle(
    base: Optional[int] = typer.Option(None, "--base"),
    a_max: Optional[int] = typer.Option(None, "--a-max"),
    verify: Optional[Path] = typer.Option(None, "--verify", help="JSON-lines file of records to recheck."),
):
    """Brute-force triples with a <= N, or recheck records from a file."""
    if verify is not None:
        if not verify.exists():
            raise typer.BadParameter(f"no such file: {verify}", param_hint="--verify")
        bad = 0
        checked = 0
        with verify.open("r", encoding="utf-8") as stream:
            for line_no, line in enumerate(stream, start=1):
                if not line.strip():
                    continue
                checked += 1
                try:
                    ok = verify_record(OutputRecord.model_validate_json(line))
                except ValidationError:
                    ok = False
                if not ok:
                    bad += 1
                    typer.echo(f"{verify}:{line_no}: record failed verification", err=True)
        _emit_json({"checked": checked, "failed": bad})
        if bad:
            raise typer.Exit(code=EXIT_PARTIAL)
        return

    if base is None or a_max is None:
        raise typer.BadParameter("oracle needs --base and --a-max, or --verify")
    writer = RecordWriter(sys.stdout, OutputFormat.json)
    for solution in brute_force(base, a_max):
        writer.write(solution)


@app.command()
def census(base: int = typer.Option(..., "--base", help="Base G >= 5.")):
    """Count triples whose three products plus one are single digits."""
    count = count_tilde_d1(base)
    lower = comb(isqrt(base - 2), 3)
    _emit_json({"g": str(base), "count": str(count), "lower_bound": str(lower)})


@app.command()
def analyze(
    base: int = typer.Option(..., "--base"),
    threshold: Optional[int] = typer.Option(None, "--threshold"),
    n3_cap_override: Optional[int] = typer.Option(None, "--n3-cap"),
):
    """Search one base and report the dependence case of each triple."""
    config = SearchConfig(threshold_B=threshold, n3_cap_override=n3_cap_override)
    for solution in search_base(base, config):
        _emit_json(classify_case(solution).to_dict())


def run(argv: Optional[Sequence[str]] = None) -> int:
    """Run the CLI and return its exit code instead of exiting."""
    args = list(argv) if argv is not None else sys.argv[1:]
    try:
        result = app(args=args, prog_name="repdigit-triples", standalone_mode=False)
    except click.exceptions.ClickException as e:
        e.show()
        return EXIT_INVALID
    except click.exceptions.Abort:
        return EXIT_INVALID
    except (InvalidArgumentError, CapacityError) as e:
        typer.echo(f"error: {e}", err=True)
        return EXIT_INVALID
    return result if isinstance(result, int) else EXIT_OK
