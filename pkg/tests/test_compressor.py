"""Tests for the reverse trie, SES emission and the compress/decompress round trip."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from sesx.core.compressor import (
    build_reverse_trie,
    compress,
    decompress,
    emit_ses,
    plan_emission,
    plan_from_records,
    position_equivalence_classes,
    run_pipeline,
)
from sesx.core.ses import Equation, Pin, Ses, check_text, position_classes, reconstruct, solve
from sesx.core.suffix import build_index, chi, compute_sre
from sesx.core.text import Text, attach_sentinel, fibonacci_word, thue_morse
from sesx.errors import Corrupted, MalformedSystem, SentinelCollision, TooLarge
from tests.corpus import binary_strings, random_corpus


def trie_of(w: Text, method: str = "suffix"):
    return build_reverse_trie(compute_sre(build_index(w), w), w, method=method)


def char_partition(w: Text) -> list[list[int]]:
    groups: dict[int, list[int]] = {}
    for pos, byte in enumerate(w.data, start=1):
        groups.setdefault(byte, []).append(pos)
    return sorted(groups.values())


class TestReverseTrie:
    """Test the compacted trie of reversed bodies."""

    def test_aa(self):
        """Both bodies are "a", so one node holds two entries."""
        w = attach_sentinel(b"aa")
        trie = trie_of(w)
        assert len(trie.nodes) == 2
        node = trie.nodes[trie.nodes[trie.root].children[0]]
        assert node.string_depth == node.edge_len == 1
        assert len(node.entries) == 2
        assert trie.path_string(1, w) == b"a"

    def test_ab(self):
        """Only empty bodies: a lone root."""
        trie = trie_of(attach_sentinel(b"ab"))
        assert len(trie.nodes) == 1
        assert trie.entry_count == 0

    def test_running_example(self, sample_text):
        """Five entries under the branches "ab" and "baa"."""
        trie = trie_of(sample_text)
        assert trie.entry_count == 5
        root = trie.nodes[trie.root]
        assert [trie.path_string(c, sample_text) for c in root.children] == [b"ab", b"baa"]

    def test_entries_spell_node_path(self):
        """Every entry ends with its node's path reversed."""
        w = attach_sentinel(thue_morse(7))
        trie = trie_of(w)
        for node_id, node in enumerate(trie.nodes):
            for e in node.entries:
                assert e.x_len == node.string_depth
                body = w.substring(e.anchor_pos - e.x_len + 1, e.x_len)
                assert body[::-1] == trie.path_string(node_id, w)

    def test_methods_agree(self, sample_text):
        """Suffix-array pruning and direct insertion give the same shape."""
        corpus = [sample_text, attach_sentinel(thue_morse(6)), attach_sentinel(fibonacci_word(9))]
        corpus += [attach_sentinel(raw) for raw in random_corpus(25, 120, (2, 3, 8), seed=4)]
        for w in corpus:
            assert trie_of(w, "suffix").shape() == trie_of(w, "insert").shape()

    def test_unknown_method(self, sample_text):
        """Only the two construction methods exist."""
        with pytest.raises(ValueError):
            trie_of(sample_text, "bogus")


class TestEmission:
    """Test DFS pairing and SES emission."""

    def test_aa(self):
        """One depth-1 equation plus two pins."""
        w = attach_sentinel(b"aa")
        sys = emit_ses(trie_of(w), w)
        assert sys.eq == (Equation(2, 1, 1),)
        assert sys.ch == (Pin(1, ord("a")), Pin(3, 0))
        assert reconstruct(sys) == w.data

    def test_ab(self):
        """No equations and three pins."""
        w = attach_sentinel(b"ab")
        sys = emit_ses(trie_of(w), w)
        assert sys.eq == ()
        assert len(sys.ch) == 3
        assert reconstruct(sys) == w.data

    def test_running_example(self, sample_text):
        """Three equations equivalent to the hand-made ones, one root pair."""
        trie = trie_of(sample_text)
        plan = plan_emission(trie)
        assert [e.anchor_pos for e in plan.dfs_list] == [5, 10, 8, 7, 3]
        assert [p.lca_depth for p in plan.pairs] == [2, 3, 0, 3]
        assert plan.root_pairs == 1

        sys = emit_ses(trie, sample_text, plan)
        assert sys.eq == ((4, 9, 2), (8, 6, 3), (5, 1, 3))
        assert sys.ch == ((1, ord("a")), (3, ord("b")), (11, 0))
        assert sys.size == 6
        reference = [Equation(6, 8, 3), Equation(9, 4, 2), Equation(1, 5, 3)]
        assert position_classes(sample_text.n, sys.eq) == position_classes(sample_text.n, reference)

    def test_pairs_meet_at_common_suffix(self):
        """LCA depth is the longest common suffix of the two bodies."""
        w = attach_sentinel(fibonacci_word(10))
        plan = plan_emission(trie_of(w))
        assert len(plan.pairs) == max(0, len(plan.dfs_list) - 1)
        for pair in plan.pairs:
            a = w.substring(pair.first.anchor_pos - pair.first.x_len + 1, pair.first.x_len)
            b = w.substring(pair.second.anchor_pos - pair.second.x_len + 1, pair.second.x_len)
            common = 0
            while common < min(len(a), len(b)) and a[-1 - common] == b[-1 - common]:
                common += 1
            assert pair.lca_depth == common

    def test_size_bound_and_literal_equalities(self):
        """size <= chi - 1 + sigma and every equation holds in w."""
        corpus = list(binary_strings(8)) + list(random_corpus(40, 400, (2, 4, 16, 64), seed=8))
        for raw in corpus:
            w = attach_sentinel(raw)
            sys = compress(raw)
            assert sys.size <= chi(w) - 1 + w.alphabet.sigma
            assert check_text(sys, w.data) is None

    def test_plan_without_trie_matches_walk(self, sample_text):
        """Sorting by reversed body gives the trie's DFS order and LCA depths."""
        corpus = [sample_text, attach_sentinel(thue_morse(7)), attach_sentinel(fibonacci_word(10))]
        corpus += [attach_sentinel(raw) for raw in binary_strings(6)]
        corpus += [attach_sentinel(raw) for raw in random_corpus(25, 300, (2, 4, 16), seed=17)]
        for w in corpus:
            records = compute_sre(build_index(w), w)
            direct = plan_from_records(records, w)
            for method in ("suffix", "insert"):
                walked = plan_emission(build_reverse_trie(records, w, method=method))
                assert direct.dfs_list == walked.dfs_list
                assert direct.lca_depth.tolist() == walked.lca_depth.tolist()

    def test_plan_from_plain_records(self, sample_text):
        """A list of records works as well as a table."""
        records = list(compute_sre(build_index(sample_text), sample_text))
        plan = plan_from_records(records, sample_text)
        assert [e.anchor_pos for e in plan.dfs_list] == [5, 10, 8, 7, 3]
        assert plan.lca_depth.tolist() == [2, 3, 0, 3]
        assert plan.equations().tolist() == [[4, 9, 2], [8, 6, 3], [5, 1, 3]]


class TestCompress:
    """Test the compress and decompress entry points."""

    def test_empty(self):
        """The sentinel alone needs one pin."""
        assert compress(b"") == Ses(1, (), ((1, 0),))
        assert decompress(compress(b""), 0) == b""

    def test_running_example_size(self):
        """The running example compresses to six constraints."""
        assert compress(b"aabbaababa").size == 6

    def test_sentinel_collision(self):
        """0x00 in the input is refused."""
        with pytest.raises(SentinelCollision):
            compress(b"ab\x00")

    def test_too_large(self):
        """The configured limit is enforced."""
        with pytest.raises(TooLarge):
            compress(b"abcdef", {"compress": {"max_raw_len": 5}})

    @pytest.mark.parametrize("k", [1, 5, 10, 12])
    def test_thue_morse_round_trip(self, k):
        """Structured words survive the round trip."""
        raw = thue_morse(k)
        sys = compress(raw)
        assert solve(sys).is_unique
        assert decompress(sys, len(raw)) == raw

    def test_random_round_trip(self):
        """Random words over several alphabets."""
        for raw in random_corpus(20, 3000, (2, 4, 16, 64), seed=21):
            assert decompress(compress(raw), len(raw)) == raw

    @settings(max_examples=80, deadline=None)
    @given(st.binary(max_size=80).map(lambda b: bytes(c % 250 + 1 for c in b)))
    def test_round_trip_property(self, raw):
        """decompress(compress(x)) == x."""
        assert decompress(compress(raw), len(raw)) == raw

    def test_length_mismatch(self):
        """n must equal raw_len + 1."""
        with pytest.raises(Corrupted):
            decompress(compress(b"abc"), 4)

    def test_ambiguous_is_corrupted(self):
        """A missing pin leaves a free class."""
        with pytest.raises(Corrupted):
            decompress(Ses(3, (), ((1, ord("a")), (3, 0))), 2)

    def test_missing_sentinel(self):
        """The decoded text must end with 0x00."""
        with pytest.raises(Corrupted):
            decompress(Ses(2, (), ((1, ord("a")), (2, ord("b")))), 1)

    def test_inner_sentinel(self):
        """0x00 may appear only at the end."""
        with pytest.raises(Corrupted):
            decompress(Ses(3, (), ((1, 0), (2, ord("a")), (3, 0))), 2)

    def test_tampered_length_never_silent(self):
        """Lengthening an equation either fails or no longer describes the original."""
        raw = thue_morse(9)
        w = attach_sentinel(raw)
        sys = compress(raw)
        for k, (i, j, length) in enumerate(sys.eq):
            eq = list(sys.eq)
            eq[k] = Equation(i, j, length + 1)
            tampered = Ses(sys.n, tuple(eq), sys.ch)
            try:
                out = decompress(tampered, len(raw))
            except (Corrupted, MalformedSystem):
                continue
            assert out != raw or check_text(tampered, w.data) is None

    def test_pipeline_result(self, sample_text):
        """Intermediate structures and per-stage timings."""
        result = run_pipeline(sample_text.raw)
        assert result.chi == 5
        assert set(result.timings) == {"index", "sre", "trie", "emission"}
        assert result.summary() == "n=11 chi=5 sigma=3 eq=3 ch=3 size=6"

    def test_container_limit(self):
        """A raw length above the limit is refused before solving."""
        with pytest.raises(TooLarge):
            decompress(compress(b"abcdef"), 6, max_raw_len=5)
        with pytest.raises(TooLarge):
            decompress(Ses(1, (), ((1, 0),)), 3_000_000_000)
        assert decompress(compress(b"abcde"), 5, max_raw_len=5) == b"abcde"

    def test_too_few_constraints(self):
        """Equations and pins that cannot fix every position are corrupt."""
        with pytest.raises(Corrupted, match="cannot determine"):
            decompress(Ses(5, ((1, 2, 1),), ((1, ord("a")), (5, 0))), 4)

    def test_pipeline_trie_is_lazy(self, sample_text):
        """The trie is built only when inspected, with the chosen method."""
        result = run_pipeline(sample_text.raw, method="insert")
        assert "trie" not in vars(result)
        assert result.trie.entry_count == 5
        assert result.trie.shape() == trie_of(sample_text).shape()


class TestPositionClasses:
    """Test that emitted equations identify exactly the equal characters."""

    def test_small(self):
        """aa$ and ab$."""
        assert position_equivalence_classes(attach_sentinel(b"aa")) == [[1, 2], [3]]
        assert position_equivalence_classes(attach_sentinel(b"ab")) == [[1], [2], [3]]

    def test_thue_morse(self):
        """Three classes, one per letter."""
        w = attach_sentinel(thue_morse(7))
        classes = position_equivalence_classes(w)
        assert len(classes) == 3
        assert sorted(classes) == char_partition(w)

    def test_corpus(self):
        """Character classes on binary and random words."""
        corpus = list(binary_strings(7)) + list(random_corpus(20, 300, (2, 4, 16), seed=6))
        for raw in corpus:
            w = attach_sentinel(raw)
            assert sorted(position_equivalence_classes(w)) == char_partition(w)
