"""Pure-Python enumeration kernels.

Reference implementations with the same contracts as the compiled backend:
flat int sequences in, plain lists out.  GF(2) gets a bitmask fast path;
other fields go through the generic table-driven path.

Layout of `gens`: member m, generator row r, coordinate c sits at
gens[(m*k + r)*v + c].  Tables are the flat q*q (or length-q) tuples from
FieldContext.
"""


def incidence_histogram(q, v, n, k, gens, add, mul):
    """hist[c] = number of hyperplanes containing exactly c of the n members.

    Hyperplanes are kernels of normalized functionals (leftmost nonzero
    coordinate scaled to 1); a member lies in the hyperplane iff every
    generator row has zero dot product with the functional.  The returned
    list has n+1 entries and sums to the number of points of GF(q)^v.
    """
    if q == 2:
        return _incidence_gf2(v, n, k, gens)
    return _incidence_generic(q, v, n, k, gens, add, mul)


def triple_dim_histogram(q, v, n, k, gens, add, mul, neg, inv):
    """hist[d] = number of unordered member triples whose span has dim d.

    Length 3k+1; all-zero when n < 3.
    """
    if n < 3:
        return [0] * (3 * k + 1)
    if q == 2:
        return _triples_gf2(v, n, k, gens)
    return _triples_generic(q, v, n, k, gens, add, mul, neg, inv)


# ---------------------------------------------------------------------------
# GF(2) bitmask paths: a row is an int with bit c = coordinate c

def _row_masks(v, n, k, gens):
    members = []
    pos = 0
    for _ in range(n):
        rows = []
        for _ in range(k):
            m = 0
            for c in range(v):
                if gens[pos]:
                    m |= 1 << c
                pos += 1
            rows.append(m)
        members.append(rows)
    return members


def _incidence_gf2(v, n, k, gens):
    members = _row_masks(v, n, k, gens)
    hist = [0] * (n + 1)
    for lead in range(v):
        base = 1 << lead
        hi = lead + 1
        for rest in range(1 << (v - hi)):
            fm = base | (rest << hi)
            cnt = 0
            for rows in members:
                for r in rows:
                    if (r & fm).bit_count() & 1:
                        break
                else:
                    cnt += 1
            hist[cnt] += 1
    return hist


def _add_mask(basis, row):
    # basis entries are (pivot mask, row); rows were reduced at insertion,
    # so one in-order pass eliminates every pivot
    for pm, br in basis:
        if row & pm:
            row ^= br
    if row:
        basis.append((row & -row, row))


def _reduce_mask(basis, row):
    for pm, br in basis:
        if row & pm:
            row ^= br
    return row


def _triples_gf2(v, n, k, gens):
    members = _row_masks(v, n, k, gens)
    hist = [0] * (3 * k + 1)
    for i in range(n):
        mi = members[i]
        for j in range(i + 1, n):
            basis = []
            for r in mi:
                _add_mask(basis, r)
            for r in members[j]:
                _add_mask(basis, r)
            r2 = len(basis)
            for l in range(j + 1, n):
                extra = 0
                tmp = []
                for r in members[l]:
                    x = _reduce_mask(basis, r)
                    x = _reduce_mask(tmp, x)
                    if x:
                        tmp.append((x & -x, x))
                        extra += 1
                hist[r2 + extra] += 1
    return hist


# ---------------------------------------------------------------------------
# generic table paths

def _incidence_generic(q, v, n, k, gens, add, mul):
    members = [
        [tuple(gens[(m * k + r) * v:(m * k + r + 1) * v]) for r in range(k)]
        for m in range(n)
    ]
    hist = [0] * (n + 1)
    f = [0] * v
    for lead in range(v):
        for c in range(v):
            f[c] = 0
        f[lead] = 1
        while True:
            cnt = 0
            for rows in members:
                inside = True
                for g in rows:
                    s = 0
                    for c in range(lead, v):
                        fc = f[c]
                        if fc:
                            s = add[s * q + mul[g[c] * q + fc]]
                    if s:
                        inside = False
                        break
                if inside:
                    cnt += 1
            hist[cnt] += 1
            c = lead + 1
            while c < v and f[c] == q - 1:
                f[c] = 0
                c += 1
            if c >= v:
                break
            f[c] += 1
    return hist


def _reduce_rows(basis, row, q, v, add, mul, neg):
    row = list(row)
    for piv, br in basis:
        coeff = row[piv]
        if coeff:
            for t in range(piv, v):
                bt = br[t]
                if bt:
                    row[t] = add[row[t] * q + neg[mul[coeff * q + bt]]]
    return row


def _first_nonzero(row):
    for c, x in enumerate(row):
        if x:
            return c
    return -1


def _triples_generic(q, v, n, k, gens, add, mul, neg, inv):
    members = [
        [tuple(gens[(m * k + r) * v:(m * k + r + 1) * v]) for r in range(k)]
        for m in range(n)
    ]
    hist = [0] * (3 * k + 1)

    def absorb(basis, raw):
        row = _reduce_rows(basis, raw, q, v, add, mul, neg)
        p = _first_nonzero(row)
        if p < 0:
            return
        li = inv[row[p]]
        if li != 1:
            row = [mul[li * q + x] for x in row]
        basis.append((p, row))

    for i in range(n):
        for j in range(i + 1, n):
            basis = []
            for raw in members[i]:
                absorb(basis, raw)
            for raw in members[j]:
                absorb(basis, raw)
            r2 = len(basis)
            for l in range(j + 1, n):
                tmp = []
                for raw in members[l]:
                    row = _reduce_rows(basis, raw, q, v, add, mul, neg)
                    row = _reduce_rows(tmp, row, q, v, add, mul, neg)
                    p = _first_nonzero(row)
                    if p >= 0:
                        li = inv[row[p]]
                        if li != 1:
                            row = [mul[li * q + x] for x in row]
                        tmp.append((p, row))
                hist[r2 + len(tmp)] += 1
    return hist
