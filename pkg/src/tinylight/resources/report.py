"""Itemized resource reports: per-row descriptions, integer totals, footprints."""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass(frozen=True)
class CostItem:
    description: str
    amount: int
    expr: str = ""          # printed instantiation, e.g. "(12 + 1) x 18 = 234"


@dataclass
class ResourceReport:
    model: str
    param_items: list[CostItem] = field(default_factory=list)
    flops_items: list[CostItem] = field(default_factory=list)
    bytes_per_weight: int = 4

    @property
    def params_total(self) -> int:
        return sum(item.amount for item in self.param_items)

    @property
    def flops_total(self) -> int:
        return sum(item.amount for item in self.flops_items)

    @property
    def footprint_bytes(self) -> int:
        return self.params_total * self.bytes_per_weight

    def footprint_quantized_bytes(self, bytes_per_weight: int = 2) -> int:
        return self.params_total * bytes_per_weight

    def merged_rows(self) -> list[tuple[str, int, int]]:
        """One (description, params, flops) row per distinct description,
        params items first, flops-only items after, in table order."""
        flops_by_desc = {}
        for item in self.flops_items:
            flops_by_desc.setdefault(item.description, 0)
            flops_by_desc[item.description] += item.amount
        rows: list[tuple[str, int, int]] = []
        seen = set()
        for item in self.param_items:
            rows.append((item.description, item.amount,
                         flops_by_desc.get(item.description, 0)))
            seen.add(item.description)
        for item in self.flops_items:
            if item.description not in seen:
                rows.append((item.description, 0, item.amount))
                seen.add(item.description)
        return rows

    def render(self) -> str:
        width = max([len("description")]
                    + [len(d) for d, _, _ in self.merged_rows()] + [len("Total")])
        lines = [f"model: {self.model}",
                 f"{'description':<{width}}  {'params':>10}  {'flops':>10}"]
        for desc, p, f in self.merged_rows():
            lines.append(f"{desc:<{width}}  {p:>10}  {f:>10}")
        lines.append(f"{'Total':<{width}}  {self.params_total:>10}  "
                     f"{self.flops_total:>10}")
        lines.append(f"footprint: {self.footprint_bytes} bytes at "
                     f"{self.bytes_per_weight} B/weight")
        return "\n".join(lines)

    def to_csv(self, fh) -> None:
        fh.write("description,params,flops\n")
        for desc, p, f in self.merged_rows():
            fh.write(f"{desc.replace(',', ';')},{p},{f}\n")
        fh.write(f"Total,{self.params_total},{self.flops_total}\n")
