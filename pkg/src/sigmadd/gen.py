"""Seeded generation of test instances: random singular genomes, and
duplicated genomes obtained by materializing one doubling layout and applying
j random DCJ operations."""

from .model import (Chromosome, FamilyTable, Gene, Genome, SINGULAR, classify,
                    NotSingularError)


class SplitMix64:
    """Tiny named PRNG; identical output on every platform and version."""

    MASK = (1 << 64) - 1

    def __init__(self, seed):
        self.state = seed & self.MASK

    def next_u64(self):
        self.state = (self.state + 0x9E3779B97F4A7C15) & self.MASK
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & self.MASK
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & self.MASK
        return z ^ (z >> 31)

    def below(self, n):
        """Uniform integer in [0, n) by rejection."""
        if n <= 0:
            raise ValueError("below() needs n > 0")
        limit = (1 << 64) - ((1 << 64) % n)
        while True:
            x = self.next_u64()
            if x < limit:
                return x % n

    def shuffle(self, items):
        for i in range(len(items) - 1, 0, -1):
            j = self.below(i + 1)
            items[i], items[j] = items[j], items[i]

    def coin(self):
        return self.next_u64() & 1 == 1


class GenSpec:
    __slots__ = ("seed", "n_star", "linear_chroms", "circular_chroms", "dcj_ops")

    def __init__(self, seed, n_star, linear_chroms, circular_chroms, dcj_ops=0):
        self.seed = seed
        self.n_star = n_star
        self.linear_chroms = linear_chroms
        self.circular_chroms = circular_chroms
        self.dcj_ops = dcj_ops
        total = linear_chroms + circular_chroms
        if not (n_star >= total >= 1) or dcj_ops < 0:
            raise ValueError("infeasible spec: need n_star >= chromosomes >= 1")

    def __repr__(self):
        return ("GenSpec(seed=%d, n_star=%d, linear=%d, circular=%d, dcj=%d)"
                % (self.seed, self.n_star, self.linear_chroms,
                   self.circular_chroms, self.dcj_ops))


def random_singular(spec):
    """Random singular genome with the requested shape counts; deterministic
    in the seed."""
    rng = SplitMix64(spec.seed)
    n = spec.n_star
    nchrom = spec.linear_chroms + spec.circular_chroms
    perm = list(range(n))
    rng.shuffle(perm)
    # composition of n into nchrom positive parts
    cuts = list(range(1, n))
    rng.shuffle(cuts)
    cuts = sorted(cuts[:nchrom - 1])
    bounds = [0] + cuts + [n]
    shapes = [False] * spec.linear_chroms + [True] * spec.circular_chroms
    families = FamilyTable(str(i + 1) for i in range(n)).close()
    chromosomes = []
    for idx in range(nchrom):
        genes = [Gene(perm[i], not rng.coin())
                 for i in range(bounds[idx], bounds[idx + 1])]
        chromosomes.append(Chromosome(genes, circular=shapes[idx]))
    return Genome(chromosomes, families, name="rand%d" % spec.seed)


def double_layout(genome):
    """One member of 2S: every chromosome duplicated into two copies."""
    if classify(genome) != SINGULAR:
        raise NotSingularError("doubling layout needs a singular genome")
    chroms = []
    for c in genome.chromosomes:
        chroms.append(Chromosome(tuple(c.genes), c.circular))
        chroms.append(Chromosome(tuple(c.genes), c.circular))
    return Genome(chroms, genome.families, name=(genome.name or "s") + "_2x")


def _genome_to_occurrence_graph(genome):
    """Adjacency structure over gene occurrences.  Occurrence extremities are
    2*occ (tail) and 2*occ+1 (head); returns (occ_families, adjacencies set,
    telomeres set) with adjacencies as ordered-normalized tuples."""
    occ_families = []
    adjacencies = set()
    telomeres = set()
    for chrom in genome.chromosomes:
        occs = []
        for gene in chrom.genes:
            occ = len(occ_families)
            occ_families.append(gene.family)
            tail, head = occ * 2, occ * 2 + 1
            occs.append((tail, head) if gene.forward else (head, tail))
        links = [(occs[i][1], occs[i + 1][0]) for i in range(len(occs) - 1)]
        if chrom.circular:
            links.append((occs[-1][1], occs[0][0]))
        else:
            telomeres.add(occs[0][0])
            telomeres.add(occs[-1][1])
        for u, v in links:
            adjacencies.add((u, v) if u <= v else (v, u))
    return occ_families, adjacencies, telomeres


def _occurrence_graph_to_genome(occ_families, adjacencies, telomeres, families, name):
    """Rebuild chromosomes: linear ones traced from telomeres, then leftover
    cycles, in deterministic order."""
    nbr = {}
    for u, v in adjacencies:
        nbr[u] = v
        nbr[v] = u
    used = set()
    chromosomes = []

    def trace(start_ext, circular):
        genes = []
        ext = start_ext
        while True:
            occ = ext // 2
            used.add(occ)
            genes.append(Gene(occ_families[occ], forward=(ext % 2 == 0)))
            other = occ * 2 + (1 - ext % 2)
            nxt = nbr.get(other)
            if nxt is None:
                return Chromosome(genes, circular=False)
            if circular and nxt // 2 == start_ext // 2:
                return Chromosome(genes, circular=True)
            ext = nxt

    for t in sorted(telomeres):
        if t // 2 in used:
            continue
        chromosomes.append(trace(t, circular=False))
    for occ in range(len(occ_families)):
        if occ not in used:
            chromosomes.append(trace(occ * 2, circular=True))
    return Genome(chromosomes, families, name=name)


def apply_random_dcjs(genome, j, seed):
    """j random DCJs: two distinct cut points uniformly among adjacencies and
    telomeres, then a uniform valid rejoining."""
    rng = SplitMix64(seed)
    occ_families, adjacencies, telomeres = _genome_to_occurrence_graph(genome)
    cuts = sorted(adjacencies) + [(t,) for t in sorted(telomeres)]
    for _ in range(j):
        if len(cuts) < 2:
            break
        i1 = rng.below(len(cuts))
        c1 = cuts[i1]
        cuts[i1] = cuts[-1]
        cuts.pop()
        i2 = rng.below(len(cuts))
        c2 = cuts[i2]
        cuts[i2] = cuts[-1]
        cuts.pop()
        for c in (c1, c2):
            if len(c) == 2:
                adjacencies.discard(c)
            else:
                telomeres.discard(c[0])
        new = []
        if len(c1) == 2 and len(c2) == 2:
            (p, q), (r, s) = c1, c2
            choice = ((p, r), (q, s)) if rng.coin() else ((p, s), (q, r))
            new = [tuple(sorted(e)) for e in choice]
            for e in new:
                adjacencies.add(e)
        elif len(c1) == 1 and len(c2) == 1:
            e = tuple(sorted((c1[0], c2[0])))
            adjacencies.add(e)
            new = [e]
        else:
            (p, q) = c1 if len(c1) == 2 else c2
            (r,) = c2 if len(c2) == 1 else c1
            if rng.coin():
                e, t = tuple(sorted((p, r))), q
            else:
                e, t = tuple(sorted((q, r))), p
            adjacencies.add(e)
            telomeres.add(t)
            new = [e, (t,)]
        cuts.extend(new)
    return _occurrence_graph_to_genome(occ_families, adjacencies, telomeres,
                                       genome.families,
                                       name=(genome.name or "g") + "_dcj")


def scrambled_double(genome, j, seed):
    """Duplicated genome: one doubling layout of a singular genome, scrambled
    by j random DCJs (j=0 keeps the double distance at 0 for every k)."""
    return apply_random_dcjs(double_layout(genome), j, seed)
