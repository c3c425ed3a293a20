#!/usr/bin/env python
# coding: utf-8

# Exact small values: Zarankiewicz numbers and extremal minimum degrees.

# In[1]:


from tripartite.bounds import kst_bound
from tripartite.search import (
    brute_force_zarankiewicz, extremal_min_degree, local_search_lower_bound, random_crosscheck,
)


# In[2]:


for n in range(2, 9):
    r = brute_force_zarankiewicz(n, 2)
    print(f"z({n},2) = {r.optimum:3d}   KST bound {kst_bound(n, 2):7.2f}   nodes {r.nodes}")


# In[3]:


for n in (1, 2, 3):
    r = extremal_min_degree(n, 2)
    print(f"n={n}: largest min degree of a K3(2)-free G_3(n) is {r.optimum}")


# In[4]:


# a random sample of dense graphs never beats the exact optimum
random_crosscheck(3, 2, 5, samples=100_000, seed=1)


# In[5]:


# beyond exhaustive reach, local search gives lower bounds
for n in (5, 6, 7):
    r = local_search_lower_bound(n, 2, seed=0, budget=500)
    print(n, r.optimum)
