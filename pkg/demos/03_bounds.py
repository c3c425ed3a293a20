#!/usr/bin/env python
# coding: utf-8

# Where the thresholds sit relative to each other as n grows.

# In[1]:


import numpy as np

from tripartite import bounds


# In[2]:


ns = np.logspace(1, 6, 6).astype(int)
rows = [(n, bounds.lower_bound(n) - n, bounds.thm_threshold(n, 2, 0.01) - n,
         bounds.prop2_threshold(n, 2) - n) for n in ns]
for n, lo, thm, p2 in rows:
    print(f"n={n:>8}  excess: lower {lo:12.2f}  thm {thm:12.2f}  prop2 {p2:12.2f}")


# In[3]:


# with eps = 0 the excess is exactly n^(11/12)
excess = np.array([bounds.thm_threshold(int(n), 2, 0) - n for n in ns])
np.allclose(excess, ns ** (11 / 12), rtol=1e-12)


# In[4]:


# smallest n at which the counting inequality used by the finder starts to hold
for eps in (0.5, 1.0, 2.0):
    print(eps, bounds.eqB_min_n(2, eps))


# In[5]:


print(bounds.bounds_csv(range(10, 15), 2, 0.5))
