"""
业务模块
hypergraph / families / lagrangian / shifting / classify / symmetrize / verify
"""
