"""Pure-Python splay kernel for the dynamic forest.

Path-decomposition forest over integer node ids: each preferred path is a
splay tree keyed by depth, a splay root's parent field doubles as its path
parent, and a lazy flip bit supports re-rooting.  This file and the Cython
twin (_splay_cy.pyx) implement the same algorithm on the same array layout;
keep them in sync.

All methods assume valid ids and preconditions; cofill.forest adds the
contract checks.
"""


class SplayKernel:
    def __init__(self):
        self.par = []
        self.left = []
        self.right = []
        self.flip = []

    def add_node(self):
        nid = len(self.par)
        self.par.append(-1)
        self.left.append(-1)
        self.right.append(-1)
        self.flip.append(0)
        return nid

    def __len__(self):
        return len(self.par)

    def _is_sroot(self, x):
        p = self.par[x]
        return p == -1 or (self.left[p] != x and self.right[p] != x)

    def _push(self, x):
        if self.flip[x]:
            self.flip[x] = 0
            l, r = self.left[x], self.right[x]
            self.left[x], self.right[x] = r, l
            if l != -1:
                self.flip[l] ^= 1
            if r != -1:
                self.flip[r] ^= 1

    def _rotate(self, x):
        p = self.par[x]
        g = self.par[p]
        if self.left[p] == x:
            b = self.right[x]
            self.right[x] = p
            self.left[p] = b
        else:
            b = self.left[x]
            self.left[x] = p
            self.right[p] = b
        if b != -1:
            self.par[b] = p
        self.par[p] = x
        self.par[x] = g
        if g != -1:
            if self.left[g] == p:
                self.left[g] = x
            elif self.right[g] == p:
                self.right[g] = x

    def _splay(self, x):
        chain = [x]
        y = x
        while not self._is_sroot(y):
            y = self.par[y]
            chain.append(y)
        while chain:
            self._push(chain.pop())
        while not self._is_sroot(x):
            p = self.par[x]
            if self._is_sroot(p):
                self._rotate(x)
            else:
                g = self.par[p]
                if (self.left[g] == p) == (self.left[p] == x):
                    self._rotate(p)
                    self._rotate(x)
                else:
                    self._rotate(x)
                    self._rotate(x)

    def _access(self, x):
        self._splay(x)
        self.right[x] = -1
        last = x
        while self.par[x] != -1:
            y = self.par[x]
            self._splay(y)
            self.right[y] = x
            last = y
            self._splay(x)
        return last

    def find_root(self, x):
        self._access(x)
        while True:
            l = self.left[x]
            if l == -1:
                break
            x = l
            self._push(x)
        self._splay(x)
        return x

    def link(self, parent, child):
        """Make parent the tree parent of child; child must be a tree root."""
        self._access(child)
        self._access(parent)
        self.par[child] = parent

    def cut(self, x):
        """Detach x from its tree parent; returns False when x is a root."""
        self._access(x)
        l = self.left[x]
        if l == -1:
            return False
        self.par[l] = -1
        self.left[x] = -1
        return True

    def evert(self, x):
        self._access(x)
        self.flip[x] ^= 1
        self._push(x)

    def lca(self, u, v):
        """Lowest common ancestor; valid only when u, v share a tree."""
        if u == v:
            return u
        self._access(u)
        return self._access(v)

    def parent_rep(self, x):
        """Parent of x in the represented tree, or -1 for a root."""
        self._access(x)
        y = self.left[x]
        if y == -1:
            return -1
        self._push(y)
        while self.right[y] != -1:
            y = self.right[y]
            self._push(y)
        self._splay(y)
        return y
