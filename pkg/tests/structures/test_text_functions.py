from qgestalt.structures import numbered_content_lines, rremove, tokens_with_columns
from qgestalt.structures.list_functions import remove_empty_lines
from qgestalt.structures.str_functions import escape_regex_special_chars


def test_escape_regex_special_chars():
    assert escape_regex_special_chars("a.b*c") == r"a\.b\*c"


def test_rremove():
    assert rremove("note 0 1/2  # G") == "note 0 1/2  "
    assert rremove("rest 1") == "rest 1"
    assert rremove("a;b;c", ";") == "a"
    assert rremove("1.5.2", ".") == "1"


def test_tokens_with_columns():
    assert tokens_with_columns("  rest 1/2") == [(3, 'rest'), (8, '1/2')]
    assert tokens_with_columns("") == []


def test_remove_empty_lines():
    assert remove_empty_lines([(1, "a"), (2, "   "), (3, "b")]) == [(1, "a"), (3, "b")]


def test_numbered_content_lines():
    text = "meter 2/4\n# incipit\n\nrest 1/2   # eighth rest\n"
    assert numbered_content_lines(text) == [(1, 'meter 2/4'), (4, 'rest 1/2')]
