from pathlib import Path
from typing import List, Optional

import click

from app.cli.deps import CliContext, existing_file, pass_cli, seed_option
from app.core.config import settings
from app.schemas.corpus import CorpusListing
from app.services.generators import LabeledMatrix, build_corpus, generate, save_corpus, to_entry
from app.utils.matrix_io import load_generator_specs


def _emit_listing(cli: CliContext, items: List[LabeledMatrix], out: Optional[str]) -> int:
    saved = [str(p) for p in save_corpus(items, Path(out))] if out else None
    listing = CorpusListing(
        app=settings.APP_NAME,
        version=settings.APP_VERSION,
        command=list(cli.argv),
        entries=[to_entry(item) for item in items],
        saved=saved,
    )
    click.echo(listing.model_dump_json(indent=2, exclude_none=True))
    return 0


@click.command("generate")
@click.argument("spec", type=existing_file)
@click.option("--out", type=click.Path(file_okay=False), default=None, help="항목별 JSON 파일을 저장할 디렉터리")
@pass_cli
def generate_cmd(cli: CliContext, spec: str, out: Optional[str]) -> int:
    """생성기 스펙(YAML/JSON)으로 라벨이 붙은 행렬 생성"""
    items: List[LabeledMatrix] = []
    for entry in load_generator_specs(spec):
        items.extend(generate(entry, cli.field))
    return _emit_listing(cli, items, out)


@click.command("build-corpus")
@click.option("--count", type=int, default=500, show_default=True)
@click.option("--max-size", type=int, default=6, show_default=True)
@seed_option
@click.option("--out", type=click.Path(file_okay=False), default=None)
@pass_cli
def build_corpus_cmd(cli: CliContext, count: int, max_size: int, seed: int, out: Optional[str]) -> int:
    """전수 검사 라벨이 붙은 혼합 코퍼스 생성"""
    return _emit_listing(cli, build_corpus(count, seed, max_size), out)
