"""
Command-line front end.

    qgestalt classify data.csv queries.csv --threshold 0.9 --format csv
    qgestalt music-classify corpus.csv query.theme --mode weak
    qgestalt selftest

Reports go to standard output (or --output); diagnostics go to standard error. Exit codes:
0 on success, 1 when a self-test group fails, 2 on any error.
"""
import argparse
import itertools
import logging
import sys
from typing import List, Optional, Sequence

import numpy as np
import pandas as pd

from qgestalt.classifier import GestaltClassifier, build_dataset, centroids, classical_centroid
from qgestalt.classifier.labels import ClassLabel
from qgestalt.files import FileActions, ingest_features, ingest_manifest, ingest_queries
from qgestalt.generic.exceptions import QGestaltError
from qgestalt.music import (MusicalClassifier, SimilarityMode, build_musical_dataset, channel_fidelities,
                            encode_theme, load_theme)
from qgestalt.parameters import OUTPUT_FORMATS, RunConfig
from qgestalt.qstate import amplitude_encode, projector
from qgestalt.similarity import fidelity_pure, similarity_degree
from qgestalt.tools.selftest import SelfTest

__all__ = ['main', 'build_parser']
logger = logging.getLogger(__name__)

FLOAT_FORMAT = '%.12f'
EXIT_OK, EXIT_CHECKS_FAILED, EXIT_ERROR = 0, 1, 2
PAIRWISE_COMMANDS = ('similarity', 'music-similarity')


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--threshold', help="threshold r, or a degree such as 'highly'; in (1/2, 1] "
                                            "for the classifiers, in [0, 1] for the pairwise reports")
    common.add_argument('--mode', choices=[m.value for m in SimilarityMode], help="musical similarity mode")
    common.add_argument('--melodic-len', type=int, help="length of the melodic channel (default 16)")
    common.add_argument('--grid', type=int, help="rhythm ticks per beat (default 4)")
    common.add_argument('--span', type=int, help="rhythm ticks (default: longest theme of the run)")
    common.add_argument('--format', dest='output_format', choices=OUTPUT_FORMATS, help="report format")
    common.add_argument('--output', help="write the report to this file instead of standard output")
    common.add_argument('--config', help="INI file with [classifier], [music], [output] sections")
    common.add_argument('--verbose', '-v', action='store_true', help="log debug output to standard error")

    parser = argparse.ArgumentParser(prog='qgestalt',
                                     description="Quantum-inspired Gestalt classification of data and themes")
    commands = parser.add_subparsers(dest='command', required=True)

    encode = commands.add_parser('encode', parents=[common], help="amplitude-encode the rows of a feature CSV")
    encode.add_argument('features')

    centroid = commands.add_parser('centroid', parents=[common],
                                   help="positive and negative centroids of a labeled data set")
    centroid.add_argument('dataset')

    classify = commands.add_parser('classify', parents=[common], help="classify query rows against a data set")
    classify.add_argument('dataset')
    classify.add_argument('queries')

    similarity = commands.add_parser('similarity', parents=[common],
                                     help="pairwise fidelity and r-similarity of feature rows")
    similarity.add_argument('features')

    music_classify = commands.add_parser('music-classify', parents=[common],
                                         help="classify themes against a labeled theme manifest")
    music_classify.add_argument('manifest')
    music_classify.add_argument('themes', nargs='*')

    music_similarity = commands.add_parser('music-similarity', parents=[common],
                                           help="pairwise melodic and rhythmic similarity of themes")
    music_similarity.add_argument('themes', nargs='+')

    commands.add_parser('selftest', parents=[common], help="run the self-verification suite")
    return parser


def _run_config(args: argparse.Namespace) -> RunConfig:
    pairwise = args.command in PAIRWISE_COMMANDS
    return RunConfig.load(args.config, threshold=None if pairwise else args.threshold,
                          similarity=args.threshold if pairwise else None, mode=args.mode,
                          melodic_len=args.melodic_len, grid=args.grid, span=args.span,
                          output_format=args.output_format, output=args.output)


def _render(frame: pd.DataFrame, config: RunConfig) -> str:
    if config.output_format == 'csv':
        return frame.to_csv(index=False, float_format=FLOAT_FORMAT, lineterminator='\n')
    if frame.empty:
        return ""
    return frame.to_string(index=False, float_format=lambda f: FLOAT_FORMAT % f) + "\n"


def _emit(text: str, config: RunConfig):
    if config.output:
        FileActions.write(config.output, text)
    else:
        sys.stdout.write(text)


def cmd_encode(args: argparse.Namespace, config: RunConfig) -> pd.DataFrame:
    rows = ingest_queries(args.features)
    states = [amplitude_encode(x) for x in rows]
    width = states[0].dimension if states else 0
    records = [[f"r{i}"] + list(psi.amplitudes) for i, psi in enumerate(states, 1)]
    return pd.DataFrame(records, columns=['row'] + [f"a{k}" for k in range(1, width + 1)])


def cmd_centroid(args: argparse.Namespace, config: RunConfig) -> pd.DataFrame:
    labeled = ingest_features(args.dataset)
    ds = build_dataset([(amplitude_encode(x), label) for x, label in labeled])
    pair = centroids(ds)
    d = pair.dimension
    records = []
    for name, rho in (('rho+', pair.positive), ('rho-', pair.negative)):
        records += [[name, f"{i + 1}"] + list(rho.matrix[i]) for i in range(d)]
    # the classical baseline lives in feature space, one dimension short of the states
    for name, wanted in (('mean+', ClassLabel.POSITIVE), ('mean-', ClassLabel.NEGATIVE)):
        mean = classical_centroid([x for x, label in labeled if label is wanted])
        records.append([name, '-'] + list(mean.values) + [np.nan] * (d - mean.dimension))
    return pd.DataFrame(records, columns=['centroid', 'row'] + [f"c{k}" for k in range(1, d + 1)])


def cmd_classify(args: argparse.Namespace, config: RunConfig) -> pd.DataFrame:
    labeled = ingest_features(args.dataset)
    queries = ingest_queries(args.queries)
    ds = build_dataset([(amplitude_encode(x), label) for x, label in labeled])
    classifier = GestaltClassifier.from_dataset(ds, config.threshold, config.workers)
    verdicts = classifier.verdicts([projector(amplitude_encode(q)) for q in queries])
    records = [[f"q{i}", v.fidelity_positive, v.fidelity_negative, str(v.label)]
               for i, v in enumerate(verdicts, 1)]
    return pd.DataFrame(records, columns=['query', 'fidelity_pos', 'fidelity_neg', 'label'])


def cmd_similarity(args: argparse.Namespace, config: RunConfig) -> pd.DataFrame:
    states = [amplitude_encode(x) for x in ingest_queries(args.features)]
    threshold = config.pair_threshold
    records = []
    for (i, psi), (j, phi) in itertools.combinations(enumerate(states, 1), 2):
        f = fidelity_pure(psi, phi)
        records.append([f"r{i}", f"r{j}", f, 'yes' if threshold.admits(f) else 'no',
                        similarity_degree(f, config.degrees) or '-'])
    return pd.DataFrame(records, columns=['a', 'b', 'fidelity', 'similar', 'degree'])


def cmd_music_classify(args: argparse.Namespace, config: RunConfig) -> pd.DataFrame:
    corpus = [(load_theme(path), label) for path, label in ingest_manifest(args.manifest)]
    queries = [load_theme(path) for path in args.themes]
    encoding = config.encoding.resolved([t for t, _ in corpus] + queries)
    logger.info(f"rhythm span {encoding.span} ticks at {encoding.grid} per beat")
    ds = build_musical_dataset([(encode_theme(t, encoding), label) for t, label in corpus])
    classifier = MusicalClassifier.from_dataset(ds, config.mode, config.threshold)
    verdicts = classifier.verdicts([encode_theme(t, encoding) for t in queries])
    records = [[t.name, v.melodic_positive, v.melodic_negative, v.rhythmic_positive, v.rhythmic_negative,
                str(v.label)] for t, v in zip(queries, verdicts)]
    return pd.DataFrame(records, columns=['query', 'melodic_pos', 'melodic_neg', 'rhythmic_pos', 'rhythmic_neg',
                                          'label'])


def cmd_music_similarity(args: argparse.Namespace, config: RunConfig) -> pd.DataFrame:
    themes = [load_theme(path) for path in args.themes]
    encoding = config.encoding.resolved(themes)
    ideas = [encode_theme(t, encoding) for t in themes]
    threshold = config.pair_threshold
    records = []
    for a, b in itertools.combinations(ideas, 2):
        f_melodic, f_rhythmic = channel_fidelities(a, b)
        similar = config.mode.combine(threshold.admits(f_melodic), threshold.admits(f_rhythmic))
        records.append([a.name, b.name, f_melodic, f_rhythmic, 'yes' if similar else 'no'])
    return pd.DataFrame(records, columns=['a', 'b', 'melodic', 'rhythmic', f"{config.mode.value}_similar"])


COMMANDS = {
    'encode': cmd_encode,
    'centroid': cmd_centroid,
    'classify': cmd_classify,
    'similarity': cmd_similarity,
    'music-classify': cmd_music_classify,
    'music-similarity': cmd_music_similarity,
}


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING, format='%(message)s')
    try:
        config = _run_config(args)
        if args.command == 'selftest':
            suite = SelfTest(seed=config.seed)
            results = suite.run()
            _emit(SelfTest.report(results), config)
            return EXIT_OK if SelfTest.all_passed(results) else EXIT_CHECKS_FAILED
        frame = COMMANDS[args.command](args, config)
        _emit(_render(frame, config), config)
    except (QGestaltError, OSError) as e:
        sys.stderr.write(f"qgestalt {args.command}: {e}\n")
        return EXIT_ERROR
    return EXIT_OK


def run() -> None:
    """Console-script entry point."""
    sys.exit(main())
