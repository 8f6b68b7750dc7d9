class UnionFind:
    """Disjoint sets over hashable items; the root of a class is its least item."""

    def __init__(self, items=()):
        self.parent = {}
        for x in items:
            self.parent[x] = x

    def find(self, x):
        if x not in self.parent:
            self.parent[x] = x
            return x
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, x, y):
        px, py = self.find(x), self.find(y)
        if px != py:
            lo, hi = (px, py) if px < py else (py, px)
            self.parent[hi] = lo

    def classes(self) -> list[tuple]:
        groups: dict = {}
        for x in self.parent:
            groups.setdefault(self.find(x), []).append(x)
        return sorted(tuple(sorted(g)) for g in groups.values())
