#!/usr/bin/env python
# coding: utf-8

# Finite fields and projective planes, step by step.

# In[1]:


import numpy as np

from tripartite.gf import field_of_order
from tripartite.plane import build_plane, check_plane_axioms, incidence_graph
from tripartite.graph import find_k2s


# In[2]:


F = field_of_order(9)  # GF(3^2), modulus x^2 + 1
print("modulus coefficients (low to high):", F.modulus)
x = F.elem([0, 1])     # the class of x
print("x^2 =", (x * x).coeffs, " x^8 =", (x ** 8).coeffs)  # x^2 = -1, x^8 = 1


# In[3]:


# multiplication table as a numpy array, elements coded 0..8
codes = [F.encode(a * b) for a in F.elements() for b in F.elements()]
table = np.array(codes).reshape(9, 9)
table


# In[4]:


plane = build_plane(3)
print(plane.size, "points and lines, line size", len(plane.incidence[0]))
print("axiom violations:", check_plane_axioms(plane))


# In[5]:


B = incidence_graph(plane)
M = np.array([[B.has_edge(i, j) for j in range(B.nr)] for i in range(B.nl)], dtype=int)
print("row sums:", set(M.sum(axis=1)), "column sums:", set(M.sum(axis=0)))
# two points share exactly one line, so M M^T is q*I + J
print("M M^T == 3I + J:", np.array_equal(M @ M.T, 3 * np.eye(13, dtype=int) + 1))


# In[6]:


print("C4-free:", find_k2s(B, 2).free)
