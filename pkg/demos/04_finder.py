#!/usr/bin/env python
# coding: utf-8

# Pulling an explicit K3(2) out of a dense tripartite graph.

# In[1]:


import random

from tripartite.constructions import construction1
from tripartite.errors import NotFound
from tripartite.finder import extract_k3s, run_pipeline, triangle_links
from tripartite.graph import TripartiteGraph, popcount, verify_certificate


# In[2]:


rng = random.Random(0)
n = 40
layers = [[(i, j) for i in range(n) for j in range(n) if rng.random() < 0.92] for _ in range(3)]
G = TripartiteGraph.from_edges(n, *layers)
print("min degree", G.min_degree(), "vs n =", n)


# In[3]:


links = triangle_links(G)
sizes = [popcount(a) for a in links.sets]
print("link sizes: min", min(sizes), "max", max(sizes), "out of", links.N)


# In[4]:


trace = run_pipeline(G, s=2, eps=1.0)
{k: v for k, v in trace.to_dict().items() if k in ("w", "alpha", "indices", "intersection_size",
                                                  "guarantee", "kst_bound", "certificate")}


# In[5]:


print("certificate verifies:", verify_certificate(G, trace.certificate))


# In[6]:


try:
    extract_k3s(construction1(2))
except NotFound as exc:
    print("construction 1:", exc)
