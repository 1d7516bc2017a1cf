"""后向分数阶 Feynman-Kac 方程的修正 BDF 卷积求积求解器"""
__version__ = "1.0.0"
