#!/usr/bin/env python
# coding: utf-8

# The two K3(2)-free constructions and what an audit says about them.

# In[1]:


import math

from tripartite.constructions import (
    Construction2Params, audit, construction1, construction2, construction2_blocks,
    count_block_five_cycles,
)


# In[2]:


G1 = construction1(3)  # n = 13
rep = audit(G1)
print("n =", rep.n, " min degree =", rep.min_degree, " excess =", rep.excess)
print("free of K3(2):", rep.freeness.free, " search nodes:", rep.freeness.nodes)


# In[3]:


# Construction 2 spreads the plane graph over a blown-up 5-cycle
n = 13
for x2 in range(math.isqrt(n - 1) + 1, n // 2 + 1):
    G2 = construction2(Construction2Params(3, x2, partition_seed=1))
    r = audit(G2)
    print(f"|X2| = {x2}: {G2.num_edges} edges, min degree {r.min_degree}, "
          f"free {r.freeness.free}")


# In[4]:


blocks = construction2_blocks(7, 3, partition_seed=0)
blocks


# In[5]:


G2 = construction2(Construction2Params(2, 3))
print("five-block 5-cycles:", count_block_five_cycles(G2, blocks))
