"""Command-line interface exposing every library operation.

Exit codes: 0 on success, 1 on domain errors (impossible inputs, failed
reconstructions), 2 on usage errors.  File arguments accept ``-`` for stdin;
the JSON layouts are documented in FORMATS.md.
"""

from __future__ import annotations

import json
import math
import string

import click

from . import algebra, bounds, multi, protocol
from .binary import (
    BlockSystem,
    Inconsistent,
    NotYetUnique,
    Reconstructed,
    reconstruct_binary,
)
from .errors import ReconstructionError
from .words import (
    Alphabet,
    Word,
    brute_distinguishing_witness,
    scattered_factor_count,
)


class Domain(click.ClickException):
    """Domain error: valid syntax, impossible request."""

    exit_code = 1


def _alphabet(ctx) -> Alphabet:
    return ctx.obj["alphabet"]


def _parse_word(text: str, alphabet: Alphabet) -> Word:
    try:
        return Word.parse(text, alphabet)
    except ValueError as exc:
        raise click.UsageError(str(exc)) from exc


def _load_json(handle) -> dict:
    try:
        return json.load(handle)
    except json.JSONDecodeError as exc:
        raise click.UsageError(f"malformed JSON input: {exc}") from exc


@click.group()
@click.option(
    "--alphabet",
    "alphabet_text",
    default="ab",
    show_default=True,
    help="Ordered alphabet as a string of single-character symbols.",
)
@click.pass_context
def main(ctx, alphabet_text):
    """Word reconstruction from subsequence counts."""
    try:
        alphabet = Alphabet.from_string(alphabet_text)
    except ValueError as exc:
        raise click.UsageError(f"--alphabet: {exc}") from exc
    ctx.obj = {"alphabet": alphabet, "explicit": alphabet_text != "ab"}


@main.command()
@click.argument("w")
@click.argument("u")
@click.pass_context
def binom(ctx, w, u):
    """Print the number of occurrences of U in W as a subsequence."""
    alphabet = _alphabet(ctx)
    click.echo(scattered_factor_count(_parse_word(w, alphabet), _parse_word(u, alphabet)))


@main.command()
@click.argument("u1")
@click.argument("u2")
@click.pass_context
def shuffle(ctx, u1, u2):
    """Print the shuffle product of U1 and U2."""
    alphabet = _alphabet(ctx)
    click.echo(algebra.shuffle(_parse_word(u1, alphabet), _parse_word(u2, alphabet)))


@main.command()
@click.argument("u1")
@click.argument("u2")
@click.pass_context
def infiltrate(ctx, u1, u2):
    """Print the infiltration product of U1 and U2."""
    alphabet = _alphabet(ctx)
    click.echo(algebra.infiltrate(_parse_word(u1, alphabet), _parse_word(u2, alphabet)))


@main.command("lyndon-reduce")
@click.argument("u")
@click.pass_context
def lyndon_reduce(ctx, u):
    """Express the count of U through counts of Lyndon words only."""
    word = _parse_word(u, _alphabet(ctx))
    if len(word) == 0:
        raise Domain("cannot reduce the empty word")
    click.echo(str(algebra.reduce_to_lyndon(word)))


@main.command("lyndon-list")
@click.argument("q", type=int)
@click.argument("l", type=int)
@click.pass_context
def lyndon_list(ctx, q, l):
    """List all Lyndon words of length <= L over Q letters, in order."""
    if q < 1 or l < 1:
        raise click.UsageError("Q and L must be positive")
    alphabet = _alphabet(ctx)
    if len(alphabet) != q:
        if ctx.obj["explicit"]:
            raise click.UsageError(f"--alphabet has {len(alphabet)} symbols, expected {q}")
        if q > 26:
            raise click.UsageError("supply --alphabet for more than 26 letters")
        alphabet = Alphabet.from_string(string.ascii_lowercase[:q])
    for word in algebra.lyndon_words(alphabet, l):
        click.echo(str(word))


def _parse_pairs(text: str) -> dict[int, int]:
    pairs: dict[int, int] = {}
    for chunk in text.split(","):
        level_text, _, value_text = chunk.partition(":")
        try:
            level, value = int(level_text), int(value_text)
        except ValueError:
            raise click.UsageError(
                f"--pairs entries look like LEVEL:VALUE, got {chunk!r}"
            ) from None
        if level in pairs:
            raise click.UsageError(f"--pairs repeats level {level}")
        pairs[level] = value
    return pairs


@main.command("reconstruct-binary")
@click.option("--n", "n", type=int, required=True, help="Word length.")
@click.option(
    "--pairs",
    "pairs_text",
    required=True,
    help="Comma-separated LEVEL:VALUE block coefficients; level 0 is the terminal-letter count.",
)
@click.pass_context
def reconstruct_binary_cmd(ctx, n, pairs_text):
    """Reconstruct a binary word from its block coefficients."""
    alphabet = _alphabet(ctx)
    if len(alphabet) != 2:
        raise click.UsageError("reconstruct-binary needs a two-letter alphabet")
    if n < 0:
        raise click.UsageError("--n must be non-negative")
    pairs = _parse_pairs(pairs_text)
    if 0 not in pairs:
        raise click.UsageError("--pairs must include level 0 to fix the letter counts")
    block_count = n - pairs[0]
    if block_count < 0:
        raise Domain(f"level-0 count {pairs[0]} exceeds the length {n}")
    try:
        system = BlockSystem.from_pairs(n, block_count, pairs)
        result = reconstruct_binary(system, alphabet)
    except ValueError as exc:
        raise Domain(str(exc)) from exc
    if isinstance(result, Inconsistent):
        raise Domain(f"no word of length {n} matches: {result.reason}")
    if isinstance(result, NotYetUnique):
        raise Domain(
            f"not yet unique: {'>=' if result.truncated else ''}{result.solutions} "
            f"solutions at level {result.deepest_level}; supply deeper coefficients"
        )
    assert isinstance(result, Reconstructed)
    click.echo(str(result.word))


@main.command("query-game")
@click.option("--hidden", "hidden_text", default=None, help="Hidden word to play against.")
@click.option(
    "--transcript",
    "transcript_file",
    type=click.File("r"),
    default=None,
    help="Replay a recorded transcript instead (JSON, - for stdin).",
)
@click.pass_context
def query_game(ctx, hidden_text, transcript_file):
    """Run the adaptive query game; prints the transcript as JSON."""
    if (hidden_text is None) == (transcript_file is None):
        raise click.UsageError("supply exactly one of --hidden or --transcript")
    if hidden_text is not None:
        oracle = protocol.WordOracle(_parse_word(hidden_text, _alphabet(ctx)))
    else:
        try:
            recorded = protocol.QueryTranscript.from_json(transcript_file.read())
        except (KeyError, ValueError) as exc:
            raise click.UsageError(f"bad transcript file: {exc}") from exc
        oracle = protocol.TranscriptOracle(recorded)
    try:
        transcript = protocol.adaptive_reconstruct(oracle)
    except ValueError as exc:
        raise Domain(str(exc)) from exc
    click.echo(json.dumps(transcript.to_json_dict(), indent=2, sort_keys=True))
    if transcript.outcome is None:
        raise Domain(f"reconstruction failed: {transcript.failure}")


@main.command()
@click.argument("w")
@click.argument("symbols")
@click.pass_context
def project(ctx, w, symbols):
    """Print the projection of W onto the letters in SYMBOLS."""
    alphabet = _alphabet(ctx)
    word = _parse_word(w, alphabet)
    try:
        keep = {alphabet.index(ch) for ch in symbols}
    except ValueError as exc:
        raise click.UsageError(str(exc)) from exc
    click.echo(str(multi.project(word, keep)))


def _projection_alphabet(ctx, data) -> Alphabet:
    if "alphabet" in data:
        return Alphabet.from_string(data["alphabet"])
    return _alphabet(ctx)


@main.command("reconstruct-projections")
@click.argument("source", type=click.File("r"))
@click.pass_context
def reconstruct_projections(ctx, source):
    """Reconstruct a word from all its two-letter projections (JSON file)."""
    data = _load_json(source)
    alphabet = _projection_alphabet(ctx, data)
    try:
        projections = {}
        for key, text in data["projections"].items():
            if len(key) != 2:
                raise ValueError(f"projection key {key!r} must name two letters")
            a, b = sorted(alphabet.index(ch) for ch in key)
            if a == b:
                raise ValueError(f"projection key {key!r} repeats a letter")
            projections[(a, b)] = Word.parse(text, alphabet)
        result = multi.reconstruct_from_pairwise_projections(projections)
    except (KeyError, ValueError) as exc:
        raise Domain(str(exc)) from exc
    if isinstance(result, multi.NoWord):
        raise Domain(result.reason)
    click.echo(str(result))


@main.command("reconstruct-general")
@click.argument("source", type=click.File("r"))
@click.pass_context
def reconstruct_general_cmd(ctx, source):
    """Reconstruct a word over any alphabet from block coefficients (JSON file)."""
    data = _load_json(source)
    alphabet = _projection_alphabet(ctx, data)
    try:
        n = int(data["n"])
        coefficients = {}
        for pair_text, level, value in data["coefficients"]:
            if len(pair_text) != 2:
                raise ValueError(f"coefficient pair {pair_text!r} must name two letters")
            block, bound = (alphabet.index(ch) for ch in pair_text)
            key = (block, bound, int(level))
            if key in coefficients:
                raise ValueError(f"duplicate coefficient for {pair_text!r} level {level}")
            coefficients[key] = int(value)
        result = multi.reconstruct_general(n, alphabet, coefficients)
    except (KeyError, ValueError, ReconstructionError) as exc:
        raise Domain(str(exc)) from exc
    click.echo(str(result.word))
    click.echo(f"coefficients used: {result.coefficients_used}")


@main.command("coverage-check")
@click.argument("source", type=click.File("r"))
@click.pass_context
def coverage_check(ctx, source):
    """Decide whether projections onto the given letter sets reconstruct uniquely.

    SOURCE holds one set per line as a string of symbols, or JSON with an
    "alphabet" and a "sets" list.
    """
    text = source.read()
    stripped = text.lstrip()
    if stripped.startswith("{"):
        data = json.loads(text)
        alphabet = _projection_alphabet(ctx, data)
        lines = data["sets"]
    else:
        alphabet = _alphabet(ctx)
        lines = [line.strip() for line in text.splitlines() if line.strip()]
    try:
        sets = [[alphabet.index(ch) for ch in line] for line in lines]
    except ValueError as exc:
        raise Domain(str(exc)) from exc
    result = multi.coverage_decide(alphabet, sets)
    if isinstance(result, multi.Reconstructible):
        click.echo("reconstructible")
    else:
        a, b = result.uncovered
        click.echo(
            f"not reconstructible: pair {alphabet.symbols[a]}{alphabet.symbols[b]} uncovered"
        )
        click.echo(f"witness: {result.first} {result.second}")


@main.command("bounds-table")
@click.option("--from", "start", type=int, required=True, help="First length.")
@click.option("--to", "stop", type=int, required=True, help="Last length (inclusive).")
@click.option("--q", "q", type=int, default=None, help="Alphabet size (>= 3) for the general table.")
def bounds_table(start, stop, q):
    """Tab-separated rows: n, threshold, classical baseline, our worst case, margin.

    The general table (with --q) prints the exact baseline and margin rounded
    down to integers.
    """
    if start < 1 or stop < start:
        raise click.UsageError("need 1 <= --from <= --to")
    if q is not None and q < 3:
        raise click.UsageError("--q must be at least 3")
    for n in range(start, stop + 1):
        if q is None:
            report = bounds.binary_bound_report(n)
            baseline, margin = report.baseline, report.margin
        else:
            report = bounds.general_bound_report(n, q)
            baseline, margin = math.floor(report.baseline), math.floor(report.margin)
        click.echo(
            f"{report.n}\t{report.kr_threshold}\t{baseline}\t{report.ours_worst_case}\t{margin}"
        )


@main.command("brute-unique")
@click.argument("w")
@click.option(
    "--set",
    "set_text",
    required=True,
    help="Comma-separated subsequence patterns forming the query set.",
)
@click.pass_context
def brute_unique(ctx, w, set_text):
    """Exhaustively test whether the query set pins W among equal-length words."""
    alphabet = _alphabet(ctx)
    word = _parse_word(w, alphabet)
    patterns = [_parse_word(p, alphabet) for p in set_text.split(",") if p != ""]
    try:
        witness = brute_distinguishing_witness(word, patterns)
    except ValueError as exc:
        raise Domain(str(exc)) from exc
    click.echo("true" if witness is None else f"false {witness}")


if __name__ == "__main__":
    main()
