"""One-pass adaptive Huffman (FGK) codec over the byte alphabet.

The tree starts as a single zero-weight NYT leaf standing for every symbol
not yet transmitted.  A known symbol emits its current code (left edge = 0,
right edge = 1); an unseen symbol emits the current NYT code followed by
the raw 8-bit literal, MSB first.  After each symbol both sides run the
same update procedure, so encoder and decoder trees never diverge.

The update walks from the symbol's leaf to the root.  At each node it first
swaps the node with the highest-numbered node of equal weight (the block
leader, never the node's own parent), then increments the node's weight.
Keeping same-weight nodes on consecutive numbers is exactly the sibling
property, so the leader can be found by scanning upward from the node's
own number.
"""

from __future__ import annotations

from .bits import BitString
from .errors import CorruptStreamError

ALPHABET_SIZE = 256
# The byte alphabet plus NYT gives at most 257 leaves, hence 2*257 - 1
# nodes.  The root keeps the top number; each NYT spawn claims the two
# numbers directly below the old NYT's.
_TOP_NUMBER = 2 * (ALPHABET_SIZE + 1) - 1


class AdaptiveHuffmanTree:
    """Mutable FGK tree state, identical on the encoding and decoding side.

    Nodes live in parallel arrays indexed by allocation order; ``node_at``
    maps a sibling-property number back to its node.  The NYT leaf is the
    node whose id equals ``nyt``.
    """

    __slots__ = (
        "weight",
        "parent",
        "left",
        "right",
        "symbol",
        "number",
        "node_at",
        "leaf_of",
        "root",
        "nyt",
    )

    def __init__(self):
        self.weight = [0]
        self.parent = [-1]
        self.left = [-1]
        self.right = [-1]
        self.symbol = [-1]
        self.number = [_TOP_NUMBER]
        self.node_at = [-1] * (_TOP_NUMBER + 1)
        self.node_at[_TOP_NUMBER] = 0
        self.leaf_of = [-1] * ALPHABET_SIZE
        self.root = 0
        self.nyt = 0

    def contains(self, byte: int) -> bool:
        return self.leaf_of[byte] != -1

    def code_for(self, byte: int) -> list[int]:
        """Current code of a previously seen symbol (root-to-leaf bits)."""
        return self._path(self.leaf_of[byte])

    def nyt_code(self) -> list[int]:
        return self._path(self.nyt)

    def _path(self, node: int) -> list[int]:
        bits = []
        parent = self.parent
        left = self.left
        p = parent[node]
        while p != -1:
            bits.append(0 if left[p] == node else 1)
            node = p
            p = parent[node]
        bits.reverse()
        return bits

    def _spawn(self, byte: int) -> int:
        """NYT gives birth: new NYT on the left, the symbol leaf on the right.

        The new NYT takes the lower of the two freed numbers; the old NYT
        becomes an internal node and keeps its own number.
        """
        old = self.nyt
        base = self.number[old]
        nyt = len(self.weight)
        leaf = nyt + 1
        self.weight.extend((0, 0))
        self.parent.extend((old, old))
        self.left.extend((-1, -1))
        self.right.extend((-1, -1))
        self.symbol.extend((-1, byte))
        self.number.extend((base - 2, base - 1))
        self.node_at[base - 2] = nyt
        self.node_at[base - 1] = leaf
        self.left[old] = nyt
        self.right[old] = leaf
        self.nyt = nyt
        self.leaf_of[byte] = leaf
        return leaf

    def update(self, byte: int) -> None:
        """Account for one occurrence of ``byte``, preserving the sibling property."""
        node = self.leaf_of[byte]
        if node == -1:
            node = self._spawn(byte)
        # hottest loop in the codec: arrays bound to locals, swap inlined
        weight = self.weight
        parent = self.parent
        left = self.left
        right = self.right
        number = self.number
        node_at = self.node_at
        top = _TOP_NUMBER
        while node != -1:
            w = weight[node]
            q = number[node]
            while q < top:
                above = node_at[q + 1]
                if above == -1 or weight[above] != w:
                    break
                q += 1
            leader = node_at[q]
            parent_node = parent[node]
            if leader == parent_node:
                # the parent is never a swap target; take the next candidate
                leader = node_at[q - 1]
            if leader != node:
                pb = parent[leader]
                if left[parent_node] == node:
                    left[parent_node] = leader
                else:
                    right[parent_node] = leader
                if left[pb] == leader:
                    left[pb] = node
                else:
                    right[pb] = node
                parent[node] = pb
                parent[leader] = parent_node
                na = number[node]
                nb = number[leader]
                number[node] = nb
                number[leader] = na
                node_at[na] = leader
                node_at[nb] = node
                weight[node] = w + 1
                node = pb
            else:
                weight[node] = w + 1
                node = parent_node

    def snapshot(self):
        """Canonical nested-tuple rendering, for structural comparison."""

        def walk(node):
            if self.left[node] == -1:
                label = "NYT" if node == self.nyt else self.symbol[node]
                return (self.number[node], self.weight[node], label)
            return (
                self.number[node],
                self.weight[node],
                walk(self.left[node]),
                walk(self.right[node]),
            )

        return walk(self.root)


def check_sibling_property(tree: AdaptiveHuffmanTree) -> bool:
    """True iff the tree satisfies the FGK structural invariants.

    Checks: exactly one zero-weight NYT leaf, internal weights equal the sum
    of their children, child numbers below parent numbers, and weights
    non-decreasing when nodes are listed by increasing number.
    """
    n = len(tree.weight)
    if tree.left[tree.nyt] != -1 or tree.weight[tree.nyt] != 0:
        return False
    for i in range(n):
        is_leaf = tree.left[i] == -1
        if is_leaf != (tree.right[i] == -1):
            return False
        if is_leaf:
            if i != tree.nyt and tree.weight[i] == 0:
                return False
        else:
            if tree.weight[i] != tree.weight[tree.left[i]] + tree.weight[tree.right[i]]:
                return False
            if (
                tree.number[tree.left[i]] >= tree.number[i]
                or tree.number[tree.right[i]] >= tree.number[i]
            ):
                return False
    by_number = sorted(range(n), key=lambda i: tree.number[i])
    weights = [tree.weight[i] for i in by_number]
    return all(a <= b for a, b in zip(weights, weights[1:]))


def encode(data: bytes) -> BitString:
    """Compress a byte sequence to a bit string (no terminator in-band)."""
    tree = AdaptiveHuffmanTree()
    out = BitString()
    out_bits = out.bits
    leaf_of = tree.leaf_of
    code_for = tree.code_for
    update = tree.update
    for byte in data:
        if leaf_of[byte] != -1:
            out_bits.extend(code_for(byte))
        else:
            out_bits.extend(tree.nyt_code())
            out_bits.extend((byte >> shift) & 1 for shift in range(7, -1, -1))
        update(byte)
    return out


def decode(bits: BitString, symbol_count: int) -> bytes:
    """Exact inverse of :func:`encode`; consumes every bit of ``bits``."""
    tree = AdaptiveHuffmanTree()
    out = bytearray()
    stream = bits.bits
    total = len(stream)
    pos = 0
    for _ in range(symbol_count):
        node = tree.root
        left = tree.left
        right = tree.right
        while left[node] != -1:
            if pos >= total:
                raise CorruptStreamError("bit stream ended mid-code")
            node = right[node] if stream[pos] else left[node]
            pos += 1
        if node == tree.nyt:
            if pos + 8 > total:
                raise CorruptStreamError("bit stream ended mid-literal")
            byte = 0
            for _ in range(8):
                byte = (byte << 1) | stream[pos]
                pos += 1
        else:
            byte = tree.symbol[node]
        out.append(byte)
        tree.update(byte)
    if pos != total:
        raise CorruptStreamError("trailing bits after the final symbol")
    return bytes(out)
