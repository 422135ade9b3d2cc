"""Genome model: chromosomes of signed genes, adjacencies, telomeres.

Genomes are multisets of linear or circular chromosomes over interned gene
families.  Everything downstream (breakpoint graphs, double distances) only
ever sees the derived adjacency/telomere multisets, so those are the core
operations here.
"""

from collections import Counter

TAIL = 0
HEAD = 1

SINGULAR = "singular"
DUPLICATED = "duplicated"
DOUBLED = "doubled"
OTHER = "other"


class GenomeSyntaxError(ValueError):
    """Malformed genome text; carries 1-based line and column."""

    def __init__(self, message, line, col):
        super().__init__("line %d, col %d: %s" % (line, col, message))
        self.line = line
        self.col = col


class UnknownFamilyError(ValueError):
    """A gene names a family absent from a closed FamilyTable."""


class FamilyTable:
    """Interns family names to dense ids 0..n-1."""

    __slots__ = ("names", "index", "_closed")

    def __init__(self, names=()):
        self.names = []
        self.index = {}
        self._closed = False
        for name in names:
            self.intern(name)

    def intern(self, name):
        fid = self.index.get(name)
        if fid is not None:
            return fid
        if self._closed:
            raise UnknownFamilyError("unknown family %r" % name)
        fid = len(self.names)
        self.names.append(name)
        self.index[name] = fid
        return fid

    def close(self):
        self._closed = True
        return self

    def __len__(self):
        return len(self.names)

    def __contains__(self, name):
        return name in self.index

    def __eq__(self, other):
        return isinstance(other, FamilyTable) and self.names == other.names

    def same_family_set(self, other):
        return set(self.names) == set(other.names)


class Gene:
    __slots__ = ("family", "forward")

    def __init__(self, family, forward=True):
        self.family = family
        self.forward = forward

    def __eq__(self, other):
        return self.family == other.family and self.forward == other.forward

    def __hash__(self):
        return hash((self.family, self.forward))

    def __repr__(self):
        return "Gene(%d, %s)" % (self.family, self.forward)


class Chromosome:
    __slots__ = ("genes", "circular")

    def __init__(self, genes, circular):
        genes = tuple(genes)
        if not genes:
            raise ValueError("chromosome must contain at least one gene")
        self.genes = genes
        self.circular = circular

    def __len__(self):
        return len(self.genes)

    def __repr__(self):
        return "Chromosome(%r, circular=%s)" % (list(self.genes), self.circular)


class Genome:
    """Multiset of chromosomes plus the family table they are written over."""

    __slots__ = ("chromosomes", "families", "name")

    def __init__(self, chromosomes, families, name=""):
        self.chromosomes = tuple(chromosomes)
        self.families = families
        self.name = name

    @property
    def kappa(self):
        """Number of linear chromosomes."""
        return sum(1 for c in self.chromosomes if not c.circular)

    @property
    def r(self):
        """Number of circular chromosomes."""
        return sum(1 for c in self.chromosomes if c.circular)

    @property
    def gene_count(self):
        return sum(len(c) for c in self.chromosomes)

    def family_counts(self):
        counts = Counter()
        for chrom in self.chromosomes:
            for gene in chrom.genes:
                counts[gene.family] += 1
        return counts

    def __repr__(self):
        return "Genome(%s: %d chromosomes over %d families)" % (
            self.name or "?", len(self.chromosomes), len(self.families))


def ext_id(family, end):
    return family * 2 + end


def ext_name(ext, families):
    return "%s%s" % (families.names[ext // 2], "h" if ext % 2 == HEAD else "t")


def gene_left_ext(gene):
    """Extremity facing the previous gene: tail when forward, head when reversed."""
    return ext_id(gene.family, TAIL if gene.forward else HEAD)


def gene_right_ext(gene):
    return ext_id(gene.family, HEAD if gene.forward else TAIL)


def _adjacency(a, b):
    return (a, b) if a <= b else (b, a)


def adjacencies_and_telomeres(genome):
    """Multisets (Counter) of adjacencies and telomeres of a genome.

    An adjacency is a normalized pair of extremity ids; a single-gene circular
    chromosome contributes the exceptional self-pair head-tail.
    """
    adj = Counter()
    tel = Counter()
    for chrom in genome.chromosomes:
        genes = chrom.genes
        for i in range(len(genes) - 1):
            adj[_adjacency(gene_right_ext(genes[i]), gene_left_ext(genes[i + 1]))] += 1
        if chrom.circular:
            adj[_adjacency(gene_right_ext(genes[-1]), gene_left_ext(genes[0]))] += 1
        else:
            tel[gene_left_ext(genes[0])] += 1
            tel[gene_right_ext(genes[-1])] += 1
    return adj, tel


def classify(genome):
    """One of singular | duplicated | doubled | other.

    Doubled means duplicated with every adjacency and telomere of even
    multiplicity (the image of a whole genome duplication).
    """
    counts = genome.family_counts()
    if len(counts) != len(genome.families):
        return OTHER
    values = set(counts.values())
    if values == {1}:
        return SINGULAR
    if values != {2}:
        return OTHER
    adj, tel = adjacencies_and_telomeres(genome)
    if all(m % 2 == 0 for m in adj.values()) and all(m % 2 == 0 for m in tel.values()):
        return DOUBLED
    return DUPLICATED


class NotSingularError(ValueError):
    pass


class NotDuplicatedError(ValueError):
    pass


def double_adjacencies(genome):
    """Adjacency/telomere multisets of the doubling 2S of a singular genome.

    Every layout of 2S shares these multisets (there are num_doubled_layouts
    of them), so the doubling is never materialized here.
    """
    if classify(genome) != SINGULAR:
        raise NotSingularError("doubling is defined for singular genomes")
    adj, tel = adjacencies_and_telomeres(genome)
    return adj + adj, tel + tel


def num_doubled_layouts(genome):
    """|2S| = 2**r: each circular chromosome doubles into two copies or one concatenate."""
    if classify(genome) != SINGULAR:
        raise NotSingularError("doubling is defined for singular genomes")
    return 2 ** genome.r


def paralog_assignment(genome):
    """Per-chromosome, per-gene paralog tags (0 for the first occurrence of a
    family in scan order, 1 for the second).  The downstream double distance
    does not depend on this choice."""
    if classify(genome) not in (DUPLICATED, DOUBLED):
        raise NotDuplicatedError("paralog tagging is defined for duplicated genomes")
    seen = set()
    tags = []
    for chrom in genome.chromosomes:
        row = []
        for gene in chrom.genes:
            if gene.family in seen:
                row.append(1)
            else:
                seen.add(gene.family)
                row.append(0)
        tags.append(row)
    return tags


def _tagged_name(base, suffix, taken):
    name = "%s_%s" % (base, suffix)
    while name in taken:
        name += "_"
    return name


def singularize(genome):
    """Tag the two copies of every family with a/b, yielding a singular genome
    over 2n tagged families (deterministic scan order)."""
    tags = paralog_assignment(genome)
    taken = set(genome.families.names)
    tagged = FamilyTable()
    pair_names = []
    for base in genome.families.names:
        a = _tagged_name(base, "a", taken)
        b = _tagged_name(base, "b", taken)
        taken.update((a, b))
        pair_names.append((a, b))
    chromosomes = []
    for chrom, row in zip(genome.chromosomes, tags):
        genes = []
        for gene, tag in zip(chrom.genes, row):
            name = pair_names[gene.family][tag]
            genes.append(Gene(tagged.intern(name), gene.forward))
        chromosomes.append(Chromosome(genes, chrom.circular))
    return Genome(chromosomes, tagged.close(), name=genome.name)


# ---------------------------------------------------------------------------
# text format
#
# One genome per `>` section, one chromosome per line, gene tokens separated
# by whitespace inside `( ... )` (circular) or `[ ... ]` (linear); a leading
# `-` reverses a gene.  `#` starts a comment; blank lines are ignored.
# ---------------------------------------------------------------------------

def _parse_chromosome(line, lineno, families):
    stripped = line.strip()
    open_ch = stripped[0]
    if open_ch not in "([":
        raise GenomeSyntaxError("chromosome must start with '(' or '['",
                                lineno, line.index(stripped[0]) + 1)
    close_ch = ")" if open_ch == "(" else "]"
    if not stripped.endswith(close_ch):
        raise GenomeSyntaxError("expected closing %r" % close_ch, lineno, len(line))
    body = stripped[1:-1]
    genes = []
    for token in body.split():
        forward = True
        name = token
        if token.startswith("-"):
            forward = False
            name = token[1:]
        if not name:
            raise GenomeSyntaxError("empty gene token", lineno, line.index(token) + 1)
        try:
            fid = families.intern(name)
        except UnknownFamilyError:
            raise GenomeSyntaxError("unknown family %r" % name,
                                    lineno, line.index(token) + 1)
        genes.append(Gene(fid, forward))
    if not genes:
        raise GenomeSyntaxError("empty chromosome", lineno, line.index(open_ch) + 1)
    return Chromosome(genes, circular=(open_ch == "("))


def parse_genomes(text, families=None):
    """Parse every `>` section of a genome file.  Returns a list of Genomes.

    With families=None each genome gets its own fresh FamilyTable; passing a
    (closed) table makes unknown names a syntax error and shares ids.
    """
    genomes = []
    current = None  # (name, chromosomes, table)
    shared = families

    def flush():
        if current is not None:
            name, chroms, table = current
            if not shared:
                table.close()
            genomes.append(Genome(chroms, table, name=name))

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].rstrip()
        if not line.strip():
            continue
        if line.lstrip().startswith(">"):
            flush()
            name = line.lstrip()[1:].strip()
            current = (name, [], shared if shared is not None else FamilyTable())
        else:
            if current is None:
                current = ("", [], shared if shared is not None else FamilyTable())
            current[1].append(_parse_chromosome(line, lineno, current[2]))
    flush()
    return genomes


def parse_genome(text, families=None):
    """Parse a single genome (at most one `>` section)."""
    genomes = parse_genomes(text, families)
    if len(genomes) != 1:
        raise GenomeSyntaxError("expected exactly one genome, found %d" % len(genomes), 1, 1)
    return genomes[0]


def serialize_genome(genome, with_header=True):
    lines = []
    if with_header:
        lines.append(">%s" % (genome.name or "genome"))
    for chrom in genome.chromosomes:
        tokens = []
        for gene in chrom.genes:
            name = genome.families.names[gene.family]
            tokens.append(name if gene.forward else "-" + name)
        if chrom.circular:
            lines.append("( %s )" % " ".join(tokens))
        else:
            lines.append("[ %s ]" % " ".join(tokens))
    return "\n".join(lines) + "\n"


def canonical_chromosome_key(chrom, families):
    """Key invariant under rotation (circular) and reverse-complement; used to
    compare genomes up to the representation symmetries."""
    variants = []
    seqs = [chrom.genes, tuple(Gene(g.family, not g.forward) for g in reversed(chrom.genes))]
    for seq in seqs:
        if chrom.circular:
            for shift in range(len(seq)):
                rotated = seq[shift:] + seq[:shift]
                variants.append(tuple((families.names[g.family], g.forward) for g in rotated))
        else:
            variants.append(tuple((families.names[g.family], g.forward) for g in seq))
    return ("circ" if chrom.circular else "lin", min(variants))


def genomes_equivalent(g1, g2):
    """True when the genomes are equal up to chromosome order, circular
    rotation and reverse-complement."""
    if not g1.families.same_family_set(g2.families):
        return False
    k1 = sorted(canonical_chromosome_key(c, g1.families) for c in g1.chromosomes)
    k2 = sorted(canonical_chromosome_key(c, g2.families) for c in g2.chromosomes)
    return k1 == k2
