"""
swalg：GF(2) 上的计算代数引擎

    f2poly      多项式算术（打包指数单项式、纯字典序）
    groebner    范式、Buchberger、Gröbner 基验证
    grassmann   g 多项式、I_{n,k}、已知基族、恒等式验证
    quotient    W_{n,k}：标准单项式基、高度、杯长
    zcltensor   W ⊗ W、零因子杯长
    cli         命令行与汇总报告
"""

__version__ = "0.1.0"
