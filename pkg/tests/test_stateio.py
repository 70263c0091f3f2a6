import pytest
from hypothesis import given
from hypothesis import strategies as st

from crystal_automata import AutomatonState, ElementA, ElementD, parse_element, parse_state, serialize_state
from crystal_automata.errors import ParseError
from crystal_automata.stateio import read_state, write_state

from strategies import element_a, element_d

CANONICAL_D = "D 3 2\n1 : 1 0 0 | 0 0 0\n2 : 0 0 0 | 0 1 1\n"
CANONICAL_A = "A 2 4\n1 : 1 0\n1 : 0 1\n1 : 1 0\n1 : 0 1\n"


@pytest.mark.parametrize("text", [CANONICAL_A, CANONICAL_D])
def test_canonical_round_trip_is_byte_identical(text):
    assert serialize_state(parse_state(text)) == text


def test_comments_and_blank_lines():
    text = "# header next\n\nD 3 2   # kind n N\n1 : 1 0 0 | 0 0 0\n  # between\n2 : 0 0 0 | 0 1 1 # tail\n"
    assert serialize_state(parse_state(text)) == CANONICAL_D


@st.composite
def states(draw):
    kind = draw(st.sampled_from("AD"))
    n = draw(st.integers(3, 4))
    strat = element_a(n, 3) if kind == "A" else element_d(n, 3)
    return AutomatonState(tuple(draw(st.lists(strat, min_size=1, max_size=5))))


@given(states())
def test_parse_serialize_round_trip(s):
    assert parse_state(serialize_state(s)) == s


def test_file_round_trip(tmp_path):
    s = parse_state(CANONICAL_D)
    path = tmp_path / "s.txt"
    write_state(s, path)
    assert path.read_bytes() == CANONICAL_D.encode()
    assert read_state(path) == s


@pytest.mark.parametrize(
    "text, line, column",
    [
        ("", 1, 1),
        ("X 3 1\n1 : 1 0 0\n", 1, 1),
        ("A 3\n", 1, 3),
        ("A 3 1\n1 : 1 x 0\n", 2, 7),
        ("A 3 1\n1 : 1 0\n", 2, 7),
        ("A 3 1\n2 : 1 0 0\n", 2, 1),
        ("A 3 1\n1 1 0 0\n", 2, 3),
        ("A 3 2\n1 : 1 0 0\n", 3, 1),
        ("A 3 1\n1 : 1 0 0\n1 : 0 1 0\n", 3, 1),
        ("D 3 1\n1 : 1 0 0 0 0 0\n", 2, 15),
        ("D 3 1\n2 : 0 0 1 | 0 0 1\n", 2, 5),
        ("A 3 1\n1 : 1 -1 1\n", 2, 7),
        ("D 2 1\n1 : 1 0 | 0 0\n", 1, 3),
    ],
)
def test_parse_errors_carry_position(text, line, column):
    with pytest.raises(ParseError) as info:
        parse_state(text)
    assert (info.value.line, info.value.column) == (line, column)
    assert f"line {line}, column {column}" in str(info.value)


def test_parse_element():
    assert parse_element("2,0", "A") == ElementA((2, 0))
    assert parse_element("1 0 0 | 0 0 1", "D") == ElementD((1, 0, 0), (0, 0, 1))
    assert parse_element("1,0,0|0,0,1", "D", 3) == ElementD((1, 0, 0), (0, 0, 1))
    for bad, kind in (("2,x", "A"), ("1,0|0,0", "A"), ("1,0,0", "D"), ("1,0|0", "D"), ("0,0", "A")):
        with pytest.raises(ParseError):
            parse_element(bad, kind)
    with pytest.raises(ParseError):
        parse_element("1,0", "A", 3)
