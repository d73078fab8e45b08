"""Pure-Python fallback for the compiled kernels in ``_ckernels``."""


def int_rank(rows, ncols):
    """Exact rank of an integer matrix by fraction-free (Bareiss) elimination."""
    m = [list(r) for r in rows if any(r)]
    nrows = len(m)
    rank = 0
    prev = 1
    for col in range(ncols):
        if rank == nrows:
            break
        piv = -1
        for r in range(rank, nrows):
            if m[r][col] != 0:
                piv = r
                break
        if piv < 0:
            continue
        if piv != rank:
            m[piv], m[rank] = m[rank], m[piv]
        top = m[rank]
        p = top[col]
        for r in range(rank + 1, nrows):
            row = m[r]
            f = row[col]
            for c in range(col + 1, ncols):
                row[c] = (p * row[c] - f * top[c]) // prev
            row[col] = 0
        prev = p
        rank += 1
    return rank


def euler_form(w, v, arrows):
    """sum w_p v_p minus sum over arrows p->r of w_p v_r; arrows[i] is +1 for i->i+1, -1 for i+1->i."""
    total = 0
    for a, b in zip(w, v):
        total += a * b
    for i, d in enumerate(arrows):
        if d > 0:
            total -= w[i] * v[i + 1]
        else:
            total -= w[i + 1] * v[i]
    return total
