"""
两级缓存

L1: 进程内 LRU；L2: 按 (n, k, 单项式序, 引擎版本) 命名的 JSON 文件。
文件里的多项式都写成规范文本，逐位可复现；损坏的文件会被删除。
引擎版本只出现在文件名中，其他版本的文件不会被读取。
"""

import json
import threading
from collections import OrderedDict
from pathlib import Path
from typing import Any, Callable, Hashable, List, Optional, Sequence, Tuple

from ..f2poly import MonomialOrder, PolynomialF2, PolyRing, VariableSet, format_polynomial, parse
from ..groebner.basis import GroebnerBasis
from swalg.logger_config import get_module_logger

logger = get_module_logger()

# 约化算法或文件格式变化时递增
ENGINE_VERSION = 1


EntryKey = Tuple[int, int, str]


def entry_key(n: int, ring: PolyRing) -> EntryKey:
    """(n, k, 单项式序)，如 (16, 4, 'w4w2w3')"""
    return n, ring.k, ''.join(ring.order_names)


class LRUCache:
    """进程内的 Gröbner 基 / 商代数表，按 (n, k, 序) 索引，超出容量时淘汰最久未用的条目"""

    def __init__(self, maxsize: int = 100, label: str = "Gröbner 基"):
        self.maxsize = maxsize
        self.label = label
        self._entries: "OrderedDict[Hashable, Any]" = OrderedDict()
        self.hits = 0
        self.misses = 0
        self.evictions = 0
        self._lock = threading.Lock()

    def get(self, key: Hashable) -> Optional[Any]:
        with self._lock:
            value = self._entries.get(key)
            if value is None:
                self.misses += 1
                return None
            self._entries.move_to_end(key)
            self.hits += 1
            return value

    def put(self, key: Hashable, value: Any):
        with self._lock:
            self._entries[key] = value
            self._entries.move_to_end(key)
            while len(self._entries) > self.maxsize:
                old, _ = self._entries.popitem(last=False)
                self.evictions += 1
                logger.debug(f"{self.label}表已满，淘汰 {old}")

    def get_or_build(self, key: Hashable, build: Callable[[], Any]) -> Any:
        """命中则返回已有条目，否则调用 build 并记录（build 在锁外运行）"""
        value = self.get(key)
        if value is None:
            value = build()
            self.put(key, value)
        return value

    def keys(self) -> List[Hashable]:
        with self._lock:
            return list(self._entries)

    def __len__(self) -> int:
        return len(self._entries)

    def clear(self):
        with self._lock:
            self._entries.clear()
            self.hits = self.misses = self.evictions = 0

    def get_statistics(self) -> dict:
        lookups = self.hits + self.misses
        return {
            'label': self.label,
            'size': len(self._entries),
            'maxsize': self.maxsize,
            'hits': self.hits,
            'misses': self.misses,
            'evictions': self.evictions,
            'hit_rate': self.hits / lookups if lookups else 0,
        }


def basis_to_payload(n: int, basis: GroebnerBasis) -> dict:
    """缓存文件内容：多项式一律写成规范文本"""
    ring = basis.ring
    return {
        'k': ring.k,
        'n': n,
        'order': list(ring.order_names),
        'generators': [format_polynomial(g) for g in basis.generators],
        'reduced': basis.reduced,
        'lm': [format_polynomial(PolynomialF2(ring, (m,), normalized=True)) for m in basis.lms],
    }


def basis_from_payload(payload: dict) -> GroebnerBasis:
    variables = VariableSet(payload['k'])
    ring = PolyRing(variables, MonomialOrder.from_names(variables, payload['order']))
    gens = tuple(parse(text, ring) for text in payload['generators'])
    basis = GroebnerBasis(gens, reduced=bool(payload['reduced']))
    lms = [format_polynomial(PolynomialF2(ring, (m,), normalized=True)) for m in basis.lms]
    if lms != payload['lm']:
        raise ValueError(f"首项列表与生成元不一致: {payload['lm']} != {lms}")
    return basis


class BasisCache:
    """Gröbner 基缓存

    L1: 内存 LRU（快速）
    L2: 磁盘 JSON（持久，可人工检查）
    """

    def __init__(self, cache_dir: Optional[str] = '.swalg_cache', enabled: bool = True, memory_items: int = 32):
        """
        Args:
            cache_dir: 缓存目录（首次写入时创建）
            enabled: False 时只使用内存层
            memory_items: 内存层容量
        """
        self.memory = LRUCache(maxsize=memory_items)
        self.disk_dir = Path(cache_dir) if enabled and cache_dir else None
        self.lock = threading.Lock()

    @staticmethod
    def file_name(n: int, k: int, order_names: Sequence[str]) -> str:
        return f"gb_n{n}_k{k}_{''.join(order_names)}_v{ENGINE_VERSION}.json"

    def path_for(self, n: int, ring: PolyRing) -> Optional[Path]:
        if self.disk_dir is None:
            return None
        return self.disk_dir / self.file_name(n, ring.k, ring.order_names)

    def get(self, n: int, ring: PolyRing) -> Optional[GroebnerBasis]:
        """查找 (n, ring) 的基；穿透 L1 → L2"""
        key = entry_key(n, ring)
        with self.lock:
            value = self.memory.get(key)
            if value is not None:
                logger.debug(f"缓存命中（内存）: {key}")
                return value

            path = self.path_for(n, ring)
            if path is None or not path.exists():
                return None
            try:
                payload = json.loads(path.read_text(encoding='utf-8'))
                if (payload['n'], payload['k'], tuple(payload['order'])) != (n, ring.k, ring.order_names):
                    raise ValueError(f"文件内容与键 ({n}, {ring.k}, {ring.order_names}) 不符")
                value = basis_from_payload(payload)
            except Exception as e:
                logger.warning(f"缓存文件损坏，已删除: {path}, {e}")
                path.unlink(missing_ok=True)
                return None

            self.memory.put(key, value)
            logger.debug(f"缓存命中（磁盘）: {path.name}")
            return value

    def put(self, n: int, basis: GroebnerBasis) -> Optional[Path]:
        """写入两级缓存，返回磁盘文件路径（未启用时为 None）"""
        ring = basis.ring
        key = entry_key(n, ring)
        with self.lock:
            self.memory.put(key, basis)
            path = self.path_for(n, ring)
            if path is None:
                return None
            try:
                path.parent.mkdir(parents=True, exist_ok=True)
                text = json.dumps(basis_to_payload(n, basis), sort_keys=True, indent=2) + "\n"
                tmp = path.with_suffix('.tmp')
                tmp.write_text(text, encoding='utf-8')
                tmp.replace(path)
                logger.debug(f"缓存写入磁盘: {path.name}")
            except OSError as e:
                logger.warning(f"磁盘缓存写入失败: {path}, {e}")
                return None
            return path

    def get_or_compute(self, n: int, ring: PolyRing, compute: Callable[[], GroebnerBasis]) -> GroebnerBasis:
        basis = self.get(n, ring)
        if basis is None:
            basis = compute()
            self.put(n, basis)
        return basis

    def clear(self):
        """清空两级缓存"""
        with self.lock:
            self.memory.clear()
            if self.disk_dir and self.disk_dir.exists():
                for file in self.disk_dir.glob('gb_*.json'):
                    file.unlink()
        logger.info("Gröbner 基缓存已清空")
