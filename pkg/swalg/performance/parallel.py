"""
并行执行辅助

把相互独立的任务分发到进程池（或线程池），按任务顺序收集结果，
保证合并结果与调度无关。
"""

import time
from concurrent.futures import ProcessPoolExecutor, ThreadPoolExecutor, as_completed
from typing import Any, Callable, List, Literal, Sequence, Tuple

from swalg.logger_config import get_module_logger

logger = get_module_logger()

Backend = Literal['threading', 'multiprocessing']


def run_parallel(
    func: Callable[..., Any],
    tasks: Sequence[Tuple],
    n_workers: int = 1,
    backend: Backend = 'multiprocessing',
    label: str = "tasks",
) -> List[Any]:
    """并行执行 func(*task)

    Args:
        func: 模块级函数（多进程下需要可 pickle）
        tasks: 参数元组列表
        n_workers: 工作进程数；<= 1 时串行执行
        backend: 'multiprocessing' 或 'threading'
        label: 日志中的任务名称

    Returns:
        与 tasks 同序的结果列表
    """
    start = time.perf_counter()
    results: List[Any] = [None] * len(tasks)

    if n_workers <= 1 or len(tasks) <= 1:
        for idx, task in enumerate(tasks):
            results[idx], _ = _timed_call(func, task)
    else:
        pool_cls = ProcessPoolExecutor if backend == 'multiprocessing' else ThreadPoolExecutor
        workers = min(n_workers, len(tasks))
        logger.debug(f"并行执行 {len(tasks)} 个{label}，{workers} 个工作者（{backend}）")
        with pool_cls(max_workers=workers) as pool:
            futures = {pool.submit(_timed_call, func, task): idx for idx, task in enumerate(tasks)}
            for future in as_completed(futures):
                idx = futures[future]
                try:
                    results[idx], elapsed = future.result()
                    logger.debug(f"{label}[{idx}] 完成：{elapsed:.2f}ms")
                except Exception as e:
                    logger.error(f"{label}[{idx}] 执行失败: {e}")
                    raise

    elapsed = (time.perf_counter() - start) * 1000
    logger.debug(f"{len(tasks)} 个{label}完成，总耗时 {elapsed:.2f}ms")
    return results


def _timed_call(func: Callable[..., Any], task: Tuple) -> Tuple[Any, float]:
    """任务包装器（用于多进程）

    Returns:
        (result, elapsed_ms) 元组
    """
    start = time.perf_counter()
    result = func(*task)
    return result, (time.perf_counter() - start) * 1000
