# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled GF(2) convolution kernel.

Mirrors _kernels_py: bitsets travel as little-endian bytes, the table as a
flat int array.  Scratch is a byte-per-bit buffer toggled per support pair.
"""

from libc.stdlib cimport malloc, free
from libc.string cimport memset

IMPL = "cython"


cdef class Convolver:
    cdef int order
    cdef int nbytes
    cdef int *table

    def __cinit__(self, rows):
        cdef int order = len(rows)
        cdef int x, y
        self.order = order
        self.nbytes = (order + 7) >> 3
        self.table = <int *> malloc(order * order * sizeof(int))
        if self.table == NULL:
            raise MemoryError()
        for x in range(order):
            row = rows[x]
            for y in range(order):
                self.table[x * order + y] = row[y]

    def __dealloc__(self):
        if self.table != NULL:
            free(self.table)

    def convolve(self, ubits, vbits):
        cdef bytes ub = int.to_bytes(ubits, self.nbytes, "little")
        cdef bytes vb = int.to_bytes(vbits, self.nbytes, "little")
        cdef const unsigned char *up = ub
        cdef const unsigned char *vp = vb
        cdef int order = self.order
        cdef int *uidx = <int *> malloc(order * sizeof(int))
        cdef int *vidx = <int *> malloc(order * sizeof(int))
        cdef unsigned char *scratch = <unsigned char *> malloc(order)
        cdef bytearray out
        cdef unsigned char *op
        cdef int nu = 0, nv = 0, i, j, k
        cdef int *row
        if uidx == NULL or vidx == NULL or scratch == NULL:
            free(uidx); free(vidx); free(scratch)
            raise MemoryError()
        try:
            for i in range(order):
                if up[i >> 3] & (1 << (i & 7)):
                    uidx[nu] = i
                    nu += 1
                if vp[i >> 3] & (1 << (i & 7)):
                    vidx[nv] = i
                    nv += 1
            memset(scratch, 0, order)
            for i in range(nu):
                row = self.table + uidx[i] * order
                for j in range(nv):
                    scratch[row[vidx[j]]] ^= 1
            out = bytearray(self.nbytes)
            op = out
            for k in range(order):
                if scratch[k]:
                    op[k >> 3] ^= 1 << (k & 7)
            return int.from_bytes(bytes(out), "little")
        finally:
            free(uidx)
            free(vidx)
            free(scratch)
