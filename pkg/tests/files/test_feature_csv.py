import numpy as np
import pytest

from qgestalt.classifier import ClassLabel
from qgestalt.files import features_to_csv, ingest_features, ingest_manifest, ingest_queries, write_features
from qgestalt.generic.exceptions import EmptyDatasetError, MalformedRowError
from qgestalt.qstate import FeatureVector
from qgestalt.tools import synthetic


def test_three_rows(write_text):
    path = write_text('data.csv', "f1,f2,label\n1.0,2.0,+\n-3,0.5,-\n0,0,?\n")
    rows = ingest_features(path)
    assert [label for _, label in rows] == [ClassLabel.POSITIVE, ClassLabel.NEGATIVE, ClassLabel.INDETERMINATE]
    assert np.array_equal(rows[1][0].values, [-3.0, 0.5])


def test_blank_lines_and_spaces(write_text):
    path = write_text('data.csv', "f1,label\n1.5, +\n\n2.5,-\n")
    assert len(ingest_features(path)) == 2


def test_header_only_and_empty_files(write_text):
    with pytest.raises(EmptyDatasetError):
        ingest_features(write_text('header.csv', "f1,f2,label\n"))
    with pytest.raises(EmptyDatasetError):
        ingest_features(write_text('empty.csv', ""))


def test_missing_file():
    with pytest.raises(FileNotFoundError):
        ingest_features('/nonexistent/data.csv')


@pytest.mark.parametrize("content,line", [
    ("f1,f2,label\n1,2,+\n1,x,-\n", 3),
    ("f1,f2,label\n1,2,+\n1,2,maybe\n", 3),
    ("f1,f2,label\n1,2,+\n\n1,,-\n", 4),
    ("f1,f2,label\n1,2,+\n1,nan,-\n", 3),
])
def test_malformed_rows_carry_line_numbers(write_text, content, line):
    with pytest.raises(MalformedRowError) as info:
        ingest_features(write_text('bad.csv', content))
    assert info.value.line == line


@pytest.mark.parametrize("content,line", [
    ("f1,label\n1,2,+\n3,4,-\n", 2),
    ("f1,label\na,2,+\n3,-\n", 2),
    ("f1,label\n1,+\n3,4,-\n", 3),
    ("f1,f2,label\n1,2,+\n1,-\n", 3),
])
def test_rows_of_the_wrong_width(write_text, content, line):
    """A row wider or narrower than the header is an error; no field is silently dropped."""
    with pytest.raises(MalformedRowError) as info:
        ingest_features(write_text('bad.csv', content))
    assert info.value.line == line


def test_wide_query_rows(write_text):
    with pytest.raises(MalformedRowError) as info:
        ingest_queries(write_text('q.csv', "f1\n1\n2,3\n"))
    assert info.value.line == 3


def test_missing_label_column(write_text):
    with pytest.raises(MalformedRowError) as info:
        ingest_features(write_text('nolabel.csv', "f1,f2\n1,2\n"))
    assert info.value.line == 1


def test_queries(write_text):
    queries = ingest_queries(write_text('q.csv', "f1,f2\n1,2\n3,4\n"))
    assert [q.values.tolist() for q in queries] == [[1.0, 2.0], [3.0, 4.0]]
    assert ingest_queries(write_text('empty.csv', "")) == []
    assert ingest_queries(write_text('header.csv', "f1,f2\n")) == []


def test_queries_ignore_label_column(write_text):
    queries = ingest_queries(write_text('q.csv', "f1,label\n1,+\n"))
    assert queries[0].values.tolist() == [1.0]


def test_flower_rows_survive_the_file(rng, tmp_path):
    """Twelve generated two-feature rows come back with the generator's counts."""
    rows = synthetic.flower_rows(rng, 5, 5, 2)
    path = str(tmp_path / 'flowers.csv')
    write_features(path, rows)
    read = ingest_features(path)
    assert len(read) == 12
    assert all(x.dimension == 2 for x, _ in read)
    counts = {label: sum(1 for _, l in read if l is label) for label in ClassLabel}
    assert counts == {ClassLabel.POSITIVE: 5, ClassLabel.NEGATIVE: 5, ClassLabel.INDETERMINATE: 2}
    assert all(a.is_close(b) for (a, _), (b, _) in zip(rows, read))


def test_features_to_csv_layout():
    text = features_to_csv([(FeatureVector([1.0, 0.5]), ClassLabel.POSITIVE)])
    assert text.splitlines() == ["f1,f2,label", "1,0.5,+"]
    assert features_to_csv([(FeatureVector([2.0]), None)]).splitlines() == ["f1", "2"]
    assert features_to_csv([]) == ""


def test_manifest(write_text):
    path = write_text('corpus/manifest.csv', "theme,label\nthemes/a.theme,+\nb.theme,-\n")
    rows = ingest_manifest(path)
    assert rows[0][0].endswith('corpus/themes/a.theme')
    assert rows[1][1] is ClassLabel.NEGATIVE
    with pytest.raises(MalformedRowError):
        ingest_manifest(write_text('bad.csv', "path,label\na.theme,+\n"))
    with pytest.raises(EmptyDatasetError):
        ingest_manifest(write_text('none.csv', "theme,label\n"))
