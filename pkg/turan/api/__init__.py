"""
API路由模块
族目录、Lagrangian、普查、shift 与对称化的只读接口
"""
