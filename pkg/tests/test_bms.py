"""Tests for macro schemes, their validity and conversion to equation systems."""

import pytest

from sesx.core.bms import (
    Bms,
    Copy,
    Literal,
    bms_to_ses,
    greedy_left_bms,
    literal_bms,
    phrase_intervals,
    transition_function,
    validate_bms,
)
from sesx.core.ses import reconstruct
from sesx.core.text import Text, attach_sentinel, fibonacci_word, thue_morse
from sesx.errors import InconsistentBms, InvalidBms, ParseError
from sesx.formats.bmsfile import parse_bms, render_bms
from tests.corpus import random_corpus

A, B = ord("a"), ord("b")


class TestStructure:
    """Test phrases, intervals and the transition function."""

    def test_intervals_and_tau(self):
        """[a, b, copy(1,2)] covers [1..4]."""
        b = Bms(4, (Literal(A), Literal(B), Copy(1, 2)))
        assert phrase_intervals(b) == [(1, 1), (2, 2), (3, 4)]
        tau = transition_function(b)
        assert [tau(i) for i in range(1, 5)] == [None, None, 1, 2]

    def test_lengths_must_sum_to_n(self):
        """Phrase lengths cover exactly n positions."""
        with pytest.raises(InconsistentBms):
            Bms(5, (Literal(A), Copy(1, 2)))

    def test_copy_source_in_bounds(self):
        """Sources must lie inside [1..n]."""
        with pytest.raises(InconsistentBms):
            Bms(3, (Literal(A), Copy(3, 2)))
        with pytest.raises(InconsistentBms):
            Bms(3, (Literal(A), Copy(0, 2)))

    def test_source_ending_at_n_is_in_bounds(self):
        """[2..3] fits a length-3 text; pointing at itself is a cycle, not a bounds error."""
        scheme = Bms(3, (Literal(A), Copy(2, 2)))
        assert phrase_intervals(scheme) == [(1, 1), (2, 3)]
        with pytest.raises(InvalidBms):
            validate_bms(scheme)


class TestValidate:
    """Test cycle detection over tau."""

    def test_left_pointers(self):
        """Pointers leading left to literals are valid."""
        validate_bms(Bms(4, (Literal(A), Literal(B), Copy(1, 2))))
        validate_bms(Bms(1, (Literal(A),)))

    def test_two_cycle(self):
        """Two copies pointing at each other never reach a literal."""
        with pytest.raises(InvalidBms) as exc:
            validate_bms(Bms(2, (Copy(2, 1), Copy(1, 1))))
        assert exc.value.position in (1, 2)

    def test_right_pointer(self):
        """Pointers to the right are fine when they end at a literal."""
        validate_bms(Bms(3, (Copy(2, 2), Literal(A))))

    def test_self_loop(self):
        """A copy of itself is a cycle."""
        with pytest.raises(InvalidBms):
            validate_bms(Bms(2, (Literal(A), Copy(2, 1))))


class TestToSes:
    """Test conversion to equation systems."""

    def test_transcription(self):
        """abab$ as a, b, copy(1,2), $."""
        w = attach_sentinel(b"abab")
        b = Bms(5, (Literal(A), Literal(B), Copy(1, 2), Literal(0)))
        sys = bms_to_ses(b, w)
        assert sys.eq == ((3, 1, 2),)
        assert sys.ch == ((1, A), (2, B), (5, 0))
        assert sys.size == 4
        assert reconstruct(sys) == w.data

    def test_literal_scheme(self):
        """All literals give n pins."""
        w = attach_sentinel(b"hello")
        sys = bms_to_ses(literal_bms(w), w)
        assert len(sys.ch) == w.n
        assert reconstruct(sys) == w.data

    def test_bidirectional_scheme(self):
        """A scheme with a right pointer still converts and reconstructs."""
        w = attach_sentinel(b"aaa")
        sys = bms_to_ses(Bms(4, (Copy(2, 2), Literal(A), Literal(0))), w)
        assert reconstruct(sys) == w.data

    def test_inconsistent_copy(self):
        """Copies must match the text."""
        w = attach_sentinel(b"abba")
        with pytest.raises(InconsistentBms) as exc:
            bms_to_ses(Bms(5, (Literal(A), Literal(B), Copy(1, 2), Literal(0))), w)
        assert exc.value.phrase_index == 2

    def test_inconsistent_literal(self):
        """Literals must match the text."""
        w = attach_sentinel(b"ab")
        with pytest.raises(InconsistentBms):
            bms_to_ses(Bms(3, (Literal(A), Literal(A), Literal(0))), w)

    def test_invalid_scheme(self):
        """Cycles are reported before conversion."""
        w = attach_sentinel(b"a")
        with pytest.raises(InvalidBms):
            bms_to_ses(Bms(2, (Copy(2, 1), Copy(1, 1))), w)


class TestGreedy:
    """Test the greedy longest-previous-factor scheme."""

    @pytest.mark.parametrize(
        "raw,expected",
        [
            (b"", (Literal(0),)),
            (b"aaaa", (Literal(A), Copy(1, 3), Literal(0))),
            (b"ab", (Literal(A), Literal(B), Literal(0))),
        ],
    )
    def test_examples(self, raw, expected):
        """Tiny words."""
        assert greedy_left_bms(attach_sentinel(raw)).phrases == expected

    def test_round_trip(self):
        """Size equals the phrase count and the text is reconstructed."""
        corpus = [thue_morse(8), fibonacci_word(12)] + list(random_corpus(20, 2000, (2, 4, 16), seed=17))
        for raw in corpus:
            w = attach_sentinel(raw)
            b = greedy_left_bms(w)
            validate_bms(b)
            sys = bms_to_ses(b, w)
            assert sys.size == len(b)
            assert reconstruct(sys) == w.data

    def test_sentinel_only(self):
        """The lone sentinel is one literal."""
        assert len(greedy_left_bms(Text(b"\x00"))) == 1


class TestBmsFormat:
    """Test the L/C text format."""

    def test_render_and_parse(self):
        """Rendering then parsing gives the same scheme."""
        b = Bms(5, (Literal(A), Literal(B), Copy(1, 2), Literal(0)))
        text = render_bms(b)
        assert text == "n 5\nL 97\nL 98\nC 1 2\nL 0\n"
        assert parse_bms(text) == b

    def test_header_optional(self):
        """n defaults to the total phrase length."""
        assert parse_bms("L 97\nC 1 1\n").n == 2

    def test_bad_record(self):
        """Unknown tags and non-integers are parse errors."""
        with pytest.raises(ParseError):
            parse_bms("X 1\n")
        with pytest.raises(ParseError) as exc:
            parse_bms("L 97\nC one 1\n")
        assert exc.value.line_no == 2
