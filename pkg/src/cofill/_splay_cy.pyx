# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled splay kernel for the dynamic forest.

Same algorithm and array layout as _splay_py.py; keep the two in sync.
"""

from libc.stdlib cimport free, malloc, realloc


cdef class SplayKernel:
    cdef long *par
    cdef long *left
    cdef long *right
    cdef char *flip
    cdef long *chain
    cdef Py_ssize_t n, cap

    def __cinit__(self):
        self.cap = 64
        self.n = 0
        self.par = <long *>malloc(self.cap * sizeof(long))
        self.left = <long *>malloc(self.cap * sizeof(long))
        self.right = <long *>malloc(self.cap * sizeof(long))
        self.flip = <char *>malloc(self.cap * sizeof(char))
        self.chain = <long *>malloc(self.cap * sizeof(long))
        if (self.par is NULL or self.left is NULL or self.right is NULL
                or self.flip is NULL or self.chain is NULL):
            raise MemoryError()

    def __dealloc__(self):
        free(self.par)
        free(self.left)
        free(self.right)
        free(self.flip)
        free(self.chain)

    def __len__(self):
        return self.n

    cdef int _grow(self) except -1:
        cdef Py_ssize_t newcap = self.cap * 2
        self.par = <long *>realloc(self.par, newcap * sizeof(long))
        self.left = <long *>realloc(self.left, newcap * sizeof(long))
        self.right = <long *>realloc(self.right, newcap * sizeof(long))
        self.flip = <char *>realloc(self.flip, newcap * sizeof(char))
        self.chain = <long *>realloc(self.chain, newcap * sizeof(long))
        if (self.par is NULL or self.left is NULL or self.right is NULL
                or self.flip is NULL or self.chain is NULL):
            raise MemoryError()
        self.cap = newcap
        return 0

    def add_node(self):
        if self.n == self.cap:
            self._grow()
        cdef long nid = self.n
        self.par[nid] = -1
        self.left[nid] = -1
        self.right[nid] = -1
        self.flip[nid] = 0
        self.n += 1
        return nid

    cdef inline bint _is_sroot(self, long x):
        cdef long p = self.par[x]
        return p == -1 or (self.left[p] != x and self.right[p] != x)

    cdef inline void _push(self, long x):
        cdef long l, r
        if self.flip[x]:
            self.flip[x] = 0
            l = self.left[x]
            r = self.right[x]
            self.left[x] = r
            self.right[x] = l
            if l != -1:
                self.flip[l] ^= 1
            if r != -1:
                self.flip[r] ^= 1

    cdef void _rotate(self, long x):
        cdef long p = self.par[x]
        cdef long g = self.par[p]
        cdef long b
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

    cdef void _splay(self, long x):
        cdef Py_ssize_t top = 0
        cdef long y = x
        cdef long p, g
        self.chain[top] = x
        top += 1
        while not self._is_sroot(y):
            y = self.par[y]
            self.chain[top] = y
            top += 1
        while top > 0:
            top -= 1
            self._push(self.chain[top])
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

    cdef long _access(self, long x):
        cdef long last, y
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

    def find_root(self, long x):
        cdef long l
        self._access(x)
        while True:
            l = self.left[x]
            if l == -1:
                break
            x = l
            self._push(x)
        self._splay(x)
        return x

    def link(self, long parent, long child):
        self._access(child)
        self._access(parent)
        self.par[child] = parent

    def cut(self, long x):
        cdef long l
        self._access(x)
        l = self.left[x]
        if l == -1:
            return False
        self.par[l] = -1
        self.left[x] = -1
        return True

    def evert(self, long x):
        self._access(x)
        self.flip[x] ^= 1
        self._push(x)

    def lca(self, long u, long v):
        if u == v:
            return u
        self._access(u)
        return self._access(v)

    def parent_rep(self, long x):
        cdef long y
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
