"""Genome model: parsing, adjacency/telomere extraction, classification,
doubling and singularization."""

import pytest
from collections import Counter
from hypothesis import given, settings, strategies as st

from sigmadd.gen import GenSpec, random_singular
from sigmadd.model import (DOUBLED, DUPLICATED, OTHER, SINGULAR, FamilyTable,
                           Gene, Genome, Chromosome, GenomeSyntaxError,
                           NotDuplicatedError, NotSingularError,
                           adjacencies_and_telomeres, classify,
                           double_adjacencies, ext_id, genomes_equivalent,
                           num_doubled_layouts, parse_genome, parse_genomes,
                           serialize_genome, singularize)

EX_SINGULAR = "( 1 -3 2 )\n( 4 )\n[ 5 -6 ]\n"
EX_DUPLICATED = "( 1 2 -3 1 )\n[ -3 2 ]\n"
EX_DOUBLED = "( 1 2 )\n( 1 2 )\n[ 3 4 ]\n[ 3 4 ]\n"


def ext(g, name, end):
    return ext_id(g.families.index[name], 1 if end == "h" else 0)


def adjacency_names(g):
    adj, _ = adjacencies_and_telomeres(g)
    out = Counter()
    for (u, v), m in adj.items():
        names = tuple(sorted(["%s%s" % (g.families.names[e // 2], "th"[e % 2])
                              for e in (u, v)]))
        out[names] += m
    return out


def telomere_names(g):
    _, tel = adjacencies_and_telomeres(g)
    return Counter({"%s%s" % (g.families.names[e // 2], "th"[e % 2]): m
                    for e, m in tel.items()})


def test_parse_singular_example():
    g = parse_genome(">S\n" + EX_SINGULAR)
    assert len(g.chromosomes) == 3
    assert g.r == 2 and g.kappa == 1
    assert sorted(g.families.names) == ["1", "2", "3", "4", "5", "6"]
    assert classify(g) == SINGULAR


def test_singular_example_adjacencies():
    g = parse_genome(EX_SINGULAR)
    assert adjacency_names(g) == Counter({
        ("1h", "3h"): 1, ("2t", "3t"): 1, ("1t", "2h"): 1,
        ("4h", "4t"): 1, ("5h", "6h"): 1})
    assert telomere_names(g) == Counter({"5t": 1, "6t": 1})


def test_duplicated_example_adjacencies():
    g = parse_genome(EX_DUPLICATED)
    assert classify(g) == DUPLICATED
    assert adjacency_names(g) == Counter({
        ("1h", "2t"): 1, ("2h", "3h"): 1, ("1t", "3t"): 1,
        ("1h", "1t"): 1, ("2t", "3t"): 1})
    assert telomere_names(g) == Counter({"3h": 1, "2h": 1})


def test_empty_genome_has_no_adjacencies():
    g = Genome((), FamilyTable().close())
    adj, tel = adjacencies_and_telomeres(g)
    assert not adj and not tel


def test_single_gene_chromosomes():
    lin = parse_genome("[ 7 ]")
    assert telomere_names(lin) == Counter({"7t": 1, "7h": 1})
    assert not adjacency_names(lin)
    circ = parse_genome("( 4 )")
    assert adjacency_names(circ) == Counter({("4h", "4t"): 1})
    assert not telomere_names(circ)


def test_classify_examples():
    assert classify(parse_genome(EX_DOUBLED)) == DOUBLED
    assert classify(parse_genome("[ 1 1 2 ]")) == OTHER
    assert classify(parse_genome("( 1 2 3 4 )")) == SINGULAR


def test_counting_invariant_examples():
    for text in (EX_SINGULAR, EX_DUPLICATED, EX_DOUBLED):
        g = parse_genome(text)
        adj, tel = adjacencies_and_telomeres(g)
        assert 2 * sum(adj.values()) + sum(tel.values()) == 2 * g.gene_count


def test_double_adjacencies_match_doubled_genome():
    s = parse_genome("( 1 2 )\n[ 3 4 ]")
    b1 = parse_genome(EX_DOUBLED)
    da, dt = double_adjacencies(s)
    ba, bt = adjacencies_and_telomeres(b1)
    # remap b1 extremities onto s's family ids by name
    remap = {b1.families.index[n]: s.families.index[n] for n in b1.families.names}
    ba = Counter({tuple(sorted((remap[u // 2] * 2 + u % 2, remap[v // 2] * 2 + v % 2))): m
                  for (u, v), m in ba.items()})
    bt = Counter({remap[e // 2] * 2 + e % 2: m for e, m in bt.items()})
    assert da == ba and dt == bt
    assert num_doubled_layouts(s) == 2  # one circular chromosome


def test_double_adjacencies_single_linear_gene():
    s = parse_genome("[ 1 ]")
    da, dt = double_adjacencies(s)
    assert not da
    assert dt == Counter({0: 2, 1: 2})
    assert num_doubled_layouts(s) == 1


def test_doubling_layout_count_reported_not_enumerated():
    s = parse_genome("( 1 2 )\n( 3 )\n[ 4 ]")
    assert num_doubled_layouts(s) == 4  # 2^r with r=2


def test_double_requires_singular():
    with pytest.raises(NotSingularError):
        double_adjacencies(parse_genome(EX_DUPLICATED))


def test_singularize_duplicated_example():
    d = parse_genome(EX_DUPLICATED)
    t = singularize(d)
    assert classify(t) == SINGULAR
    assert len(t.families) == 6
    # scan order: first occurrences get the a tag
    text = serialize_genome(t, with_header=False)
    assert text == "( 1_a 2_a -3_a 1_b )\n[ -3_b 2_b ]\n"


def test_singularize_two_circles():
    d = parse_genome("( 1 )\n( 1 )")
    t = singularize(d)
    assert serialize_genome(t, with_header=False) == "( 1_a )\n( 1_b )\n"


def test_singularize_requires_duplicated():
    with pytest.raises(NotDuplicatedError):
        singularize(parse_genome(EX_SINGULAR))


def test_parse_errors_carry_position():
    with pytest.raises(GenomeSyntaxError) as e:
        parse_genome("( 1 2\n")
    assert e.value.line == 1
    with pytest.raises(GenomeSyntaxError):
        parse_genome("< 1 2 >")
    with pytest.raises(GenomeSyntaxError):
        parse_genome("( )")


def test_closed_family_table_rejects_unknown():
    table = FamilyTable(["1", "2"]).close()
    with pytest.raises(GenomeSyntaxError):
        parse_genome("[ 1 3 ]", families=table)
    g = parse_genome("[ 1 2 ]", families=table)
    assert g.families is table


def test_comments_and_blank_lines():
    g = parse_genome("# header\n\n>G # name comment\n( 1 2 ) # tail\n\n[ 3 ]\n")
    assert g.name == "G"
    assert len(g.chromosomes) == 2


def test_multi_section_parse():
    gs = parse_genomes(">A\n[ 1 ]\n>B\n( 1 )\n")
    assert [g.name for g in gs] == ["A", "B"]
    assert gs[0].kappa == 1 and gs[1].r == 1


def test_roundtrip_canonical_text():
    text = ">S\n( 1 -3 2 )\n( 4 )\n[ 5 -6 ]\n"
    g = parse_genome(text)
    assert serialize_genome(g) == text


def test_roundtrip_up_to_symmetries():
    g = parse_genome("( 1 -3 2 )\n[ 5 -6 ]")
    rotated = parse_genome("( 2 1 -3 )\n[ 6 -5 ]")  # rotation + reverse-complement
    assert genomes_equivalent(g, rotated)
    assert not genomes_equivalent(g, parse_genome("( 1 3 2 )\n[ 5 -6 ]"))


@st.composite
def genome_strategy(draw):
    seed = draw(st.integers(min_value=0, max_value=2 ** 32))
    n = draw(st.integers(min_value=1, max_value=9))
    lin = draw(st.integers(min_value=0, max_value=2))
    circ = draw(st.integers(min_value=0, max_value=2))
    if lin + circ == 0:
        lin = 1
    while lin + circ > n:
        if circ > 1 or (circ and lin):
            circ -= 1
        else:
            lin -= 1
    if lin + circ == 0:
        circ = 1
    return random_singular(GenSpec(seed, n, lin, circ))


@given(genome_strategy())
@settings(max_examples=60, deadline=None)
def test_counting_invariant_random(g):
    adj, tel = adjacencies_and_telomeres(g)
    assert 2 * sum(adj.values()) + sum(tel.values()) == 2 * g.gene_count


@given(genome_strategy())
@settings(max_examples=60, deadline=None)
def test_parse_serialize_roundtrip_random(g):
    again = parse_genome(serialize_genome(g))
    assert genomes_equivalent(g, again)
