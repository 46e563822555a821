"""Benchmark protocol: time each algorithm's fit on one dataset and tabulate."""

import json
import statistics
import threading
import time
import traceback
from dataclasses import asdict, dataclass, field
from pathlib import Path

import numpy as np

from ..estimators import REGISTRY
from ..exceptions import BadSpec
from ..metrics import accuracy_score, r2_score
from ..model_selection import kfold
from .datasets import DESK_SCALE, MadelonSpec, make_madelon
from .io import load_csv, load_svmlight

ALGORITHMS = ("svc", "lasso_lars", "elastic_net", "knn", "pca", "kmeans")

DEFAULT_PARAMS = {
    "svc": {"kernel": "rbf", "C": 1.0},
    "lasso_lars": {"alpha": 0.05},
    "elastic_net": {"alpha": 0.05, "l1_ratio": 0.5, "max_iter": 5000},
    "knn": {"n_neighbors": 5},
    "pca": {"n_components": 9},
    "kmeans": {"n_clusters": 9, "n_init": 1},
}

TIMING_NOTE = "fit only, monotonic clock, warm-up run discarded"
PARALLEL_NOTE = "tasks ran concurrently; timings include contention"


def row_label(algorithm, params):
    """Row name in the style of the classic benchmark table."""
    if algorithm == "pca":
        return f"PCA ({params.get('n_components')} components)"
    if algorithm == "kmeans":
        return f"k-Means ({params.get('n_clusters')} clusters)"
    return {
        "svc": "Support Vector Classification",
        "lasso_lars": "Lasso (LARS)",
        "elastic_net": "Elastic Net",
        "knn": "k-Nearest Neighbors",
    }[algorithm]


@dataclass(frozen=True)
class BenchRecord:
    """One benchmark row. ``status`` is ``ok``, ``failed`` or ``timeout``."""

    algorithm: str
    label: str
    dataset: str
    wall_seconds: float
    metric: str
    quality: float
    seed: int
    params: dict
    repeats: int
    run_seconds: list = field(default_factory=list)
    status: str = "ok"
    error: str = ""
    extra: dict = field(default_factory=dict)

    def to_json(self):
        return json.dumps(asdict(self), sort_keys=True)

    @classmethod
    def from_json(cls, line):
        return cls(**json.loads(line))


@dataclass
class BenchConfig:
    """What to run and where to put the results.

    ``dataset`` is a :class:`MadelonSpec` or a path to a ``.csv`` /
    ``.svm`` / ``.svmlight`` file (``label_column`` applies to CSV).
    """

    tasks: list = field(default_factory=lambda: [(a, {}) for a in ALGORITHMS])
    dataset: object = DESK_SCALE
    repeats: int = 1
    output: str = None
    timeout: float = 3600.0
    parallel: bool = False
    label_column: object = -1
    test_fraction: float = 0.25
    seed: int = 0

    def validate(self):
        if int(self.repeats) < 1:
            raise BadSpec(f"repeats must be >= 1, got {self.repeats}")
        if not self.timeout > 0:
            raise BadSpec(f"timeout must be > 0, got {self.timeout}")
        if not 0 < self.test_fraction < 1:
            raise BadSpec(f"test_fraction must lie in (0, 1), got {self.test_fraction}")
        if not self.tasks:
            raise BadSpec("no tasks configured")
        for algorithm, params in self.tasks:
            if algorithm not in ALGORITHMS:
                raise BadSpec(f"unknown algorithm {algorithm!r}; choose from {ALGORITHMS}")
            unknown = set(params) - set(REGISTRY[algorithm]._param_names())
            if unknown:
                raise BadSpec(f"{algorithm} has no parameters {sorted(unknown)}")
        if isinstance(self.dataset, MadelonSpec):
            self.dataset.validate()
        return self


def _parse_value(text):
    low = text.lower()
    if low in ("true", "yes", "on"):
        return True
    if low in ("false", "no", "off"):
        return False
    if low in ("none", "null"):
        return None
    for cast in (int, float):
        try:
            return cast(text)
        except ValueError:
            pass
    return text


def parse_config(text):
    """Build a :class:`BenchConfig` from flat ``key = value`` lines.

    Recognized keys: ``tasks`` (comma list), ``<algorithm>.<param>``,
    ``dataset`` (``madelon`` or a file path), ``madelon.<field>``,
    ``full`` (full-size Madelon), ``label_column``, ``repeats``,
    ``output``, ``timeout``, ``parallel``, ``test_fraction``, ``seed``.
    ``#`` starts a comment.
    """
    tasks = list(ALGORITHMS)
    task_params = {a: {} for a in ALGORITHMS}
    madelon = {}
    top = {}
    dataset = "madelon"
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, eq, value = line.partition("=")
        if not eq:
            raise BadSpec(f"line {lineno}: expected key = value, got {raw!r}")
        key, value = key.strip(), value.strip()
        prefix, dot, name = key.partition(".")
        if dot and prefix == "madelon":
            if name not in MadelonSpec.__dataclass_fields__:
                raise BadSpec(f"line {lineno}: unknown Madelon field {name!r}")
            madelon[name] = _parse_value(value)
        elif dot:
            if prefix not in ALGORITHMS:
                raise BadSpec(f"line {lineno}: unknown algorithm {prefix!r}")
            task_params[prefix][name] = _parse_value(value)
        elif key == "tasks":
            tasks = [t.strip() for t in value.split(",") if t.strip()]
        elif key == "dataset":
            dataset = value
        elif key in ("repeats", "output", "timeout", "parallel", "label_column",
                     "test_fraction", "seed", "full"):
            top[key] = _parse_value(value)
        else:
            raise BadSpec(f"line {lineno}: unknown key {key!r}")

    for t in tasks:
        if t not in ALGORITHMS:
            raise BadSpec(f"unknown algorithm {t!r}; choose from {ALGORITHMS}")
    full = top.pop("full", False)
    if dataset == "madelon":
        base = MadelonSpec() if full else DESK_SCALE
        if "seed" in top and "seed" not in madelon:
            madelon["seed"] = top["seed"]
        dataset = MadelonSpec(**{**base.__dict__, **madelon})
    if top.get("output") is not None:
        top["output"] = str(top["output"])
    config = BenchConfig(tasks=[(t, task_params[t]) for t in tasks], dataset=dataset, **top)
    return config.validate()


def load_dataset(source, label_column=-1):
    """Return ``(X, y, descriptor)`` for a Madelon spec or a data file."""
    if isinstance(source, MadelonSpec):
        X, y = make_madelon(source)
        name = f"madelon-synthetic {X.shape[0]}x{X.shape[1]} seed={source.seed}"
        return X, y, name
    path = Path(source)
    if path.suffix.lower() in (".svm", ".svmlight", ".libsvm"):
        X, y = load_svmlight(path)
    else:
        X, y = load_csv(path, label_column=label_column)
    if y is None:
        raise BadSpec(f"{path} has no label column")
    return X, y, f"{path.name} {X.shape[0]}x{X.shape[1]}"


def _holdout(n, fraction, seed):
    k = max(2, int(round(1 / fraction)))
    plan = kfold(n, k, shuffle=True, seed=seed)
    return plan[0]


def _quality(algorithm, model, X_test, y_test):
    if algorithm in ("svc", "knn"):
        return "accuracy", accuracy_score(y_test, model.predict(X_test))
    if algorithm in ("lasso_lars", "elastic_net"):
        return "r2", r2_score(y_test, model.predict(X_test))
    if algorithm == "pca":
        return "explained_variance_ratio", float(np.sum(model.explained_variance_ratio_))
    return "inertia", float(model.inertia_)


def _time_fit(algorithm, params, X, y, repeats):
    cls = REGISTRY[algorithm]
    supervised = algorithm not in ("pca", "kmeans")
    y_fit = y.astype(np.float64) if algorithm in ("lasso_lars", "elastic_net") else y

    def once():
        est = cls(**params)
        start = time.perf_counter()
        if supervised:
            est.fit(X, y_fit)
        else:
            est.fit(X)
        return est, time.perf_counter() - start

    once()  # warm-up
    times, model = [], None
    for _ in range(repeats):
        model, elapsed = once()
        times.append(elapsed)
    return model, times


def _knn_strategy_times(params, X_train, y_train, X_test):
    """Fit-plus-predict seconds for both neighbor search strategies."""
    out = {}
    for strategy in ("ball_tree", "brute"):
        est = REGISTRY["knn"](**{**params, "algorithm": strategy})
        start = time.perf_counter()
        est.fit(X_train, y_train).predict(X_test)
        out[f"{strategy}_fit_predict_seconds"] = time.perf_counter() - start
    return out


def run_task(algorithm, params, data, config):
    """Run one task and return its record; never raises."""
    X_train, y_train, X_test, y_test, dataset = data
    params = {**DEFAULT_PARAMS[algorithm], **params}
    regression = algorithm in ("lasso_lars", "elastic_net")
    y_test_q = y_test.astype(np.float64) if regression else y_test
    base = dict(algorithm=algorithm, label=row_label(algorithm, params), dataset=dataset,
                seed=config.seed, params=params, repeats=int(config.repeats))
    result = {}

    def work():
        try:
            model, times = _time_fit(algorithm, params, X_train, y_train, int(config.repeats))
            metric, value = _quality(algorithm, model, X_test, y_test_q)
            extra = {}
            if algorithm == "knn":
                extra = _knn_strategy_times(params, X_train, y_train, X_test)
            result["record"] = BenchRecord(
                wall_seconds=max(statistics.median(times), 1e-9), metric=metric,
                quality=float(value), run_seconds=times, extra=extra, **base)
        except Exception as exc:  # noqa: BLE001 - failures become rows
            result["record"] = BenchRecord(
                wall_seconds=float("nan"), metric="", quality=float("nan"), status="failed",
                error=f"{type(exc).__name__}: {exc}",
                extra={"traceback": traceback.format_exc(limit=5)}, **base)

    thread = threading.Thread(target=work, daemon=True, name=f"bench-{algorithm}")
    thread.start()
    return thread, result, base


def _collect(thread, result, base, deadline):
    thread.join(max(0.0, deadline - time.monotonic()))
    if thread.is_alive():
        return BenchRecord(wall_seconds=float("nan"), metric="", quality=float("nan"),
                           status="timeout", error="exceeded per-task timeout", **base)
    return result["record"]


def run_bench(config):
    """Run every task in ``config``.

    Returns
    -------
    records : list of BenchRecord
        One per task, in task order, including failed and timed-out ones.
    table : str
        Aligned text report.
    """
    config.validate()
    X, y, dataset = load_dataset(config.dataset, config.label_column)
    train, test = _holdout(len(y), config.test_fraction, config.seed)
    data = (X[train], y[train], X[test], y[test], dataset)

    records = []
    if config.parallel:
        started = time.monotonic()
        handles = [run_task(a, p, data, config) for a, p in config.tasks]
        for handle in handles:
            records.append(_collect(*handle, started + config.timeout))
    else:
        for algorithm, params in config.tasks:
            handle = run_task(algorithm, params, data, config)
            records.append(_collect(*handle, time.monotonic() + config.timeout))

    if config.output:
        write_records(config.output, records)
    return records, render_table(records, parallel=config.parallel)


def write_records(path, records):
    with open(path, "w", encoding="utf-8") as fh:
        for rec in records:
            fh.write(rec.to_json() + "\n")


def read_records(path):
    with open(path, encoding="utf-8") as fh:
        return [BenchRecord.from_json(line) for line in fh if line.strip()]


def render_table(records, parallel=False):
    """Text table with one row per record, in the classic benchmark layout."""
    datasets = sorted({r.dataset for r in records})
    repeats = sorted({r.repeats for r in records})
    lines = [
        f"Time in seconds on {', '.join(datasets)}",
        f"timing: {TIMING_NOTE}; median of {'/'.join(map(str, repeats))} run(s)",
    ]
    if parallel:
        lines.append(f"caveat: {PARALLEL_NOTE}")
    rows = []
    for r in records:
        if r.status == "ok":
            seconds = f"{r.wall_seconds:.3f}"
            quality = f"{r.metric}={r.quality:.4g}"
        else:
            seconds = r.status
            quality = r.error
        rows.append((r.label, seconds, quality))
    head = ("Algorithm", "seconds", "quality")
    widths = [max(len(row[i]) for row in rows + [head]) for i in range(3)]
    fmt = f"{{:<{widths[0]}}}  {{:>{widths[1]}}}  {{:<{widths[2]}}}"
    lines.append(fmt.format(*head).rstrip())
    lines.append("  ".join("-" * w for w in widths))
    lines.extend(fmt.format(*row).rstrip() for row in rows)
    return "\n".join(lines) + "\n"
