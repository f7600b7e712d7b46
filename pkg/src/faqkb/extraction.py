"""Document segmentation and QA extraction.

Three input shapes reduce to one flat list of LayoutBlocks: positioned text
lines (recursive X-Y cut over whitespace valleys), HTML (tag structure), and
Markdown (line grammar). Heading blocks are then clustered by style size
into hierarchy levels, nested into an intent tree, and the tree's titled
nodes become QA pairs with parent links for multi-turn answering.
"""

from __future__ import annotations

import re
import statistics
from dataclasses import dataclass, field
from html.parser import HTMLParser
from pathlib import Path
from typing import Iterable, Sequence

from .kb import QAPair

MIN_GAP = 8.0
CLUSTER_THRESHOLD = 0.75
HEADING_HEIGHT_RATIO = 1.5
MAX_QA_DEPTH = 3

BLOCK_KINDS = (
    "heading", "paragraph", "listItem", "tableCell",
    "header", "footer", "tocEntry", "caption", "other",
)
# kinds that never contribute text to an answer
EXCLUDED_KINDS = ("header", "footer", "tocEntry")


@dataclass(frozen=True)
class LayoutBlock:
    text: str
    kind: str
    order: int
    level: int | None = None
    bbox: tuple[float, float, float, float] | None = None
    # style/source bookkeeping beyond the core fields: positioned headings
    # carry their font size for clustering, table cells their grid position,
    # link-only blocks a flag for the table-of-contents heuristic
    font_size: float | None = None
    table_id: int | None = None
    row_id: int | None = None
    cell_index: int | None = None
    header_cell: bool = False
    link_only: bool = False


@dataclass
class IntentNode:
    title: str
    level: int
    blocks: list[LayoutBlock] = field(default_factory=list)
    children: list["IntentNode"] = field(default_factory=list)


@dataclass(frozen=True)
class IntentTree:
    root: IntentNode


@dataclass(frozen=True)
class PositionedLine:
    x0: float
    y0: float
    x1: float
    y1: float
    text: str


@dataclass(frozen=True)
class ExtractionResult:
    qa_pairs: tuple[QAPair, ...]
    warnings: tuple[str, ...]
    trees: tuple[IntentTree, ...]


# --- positioned input: recursive X-Y cut ---

def parse_positioned_lines(text: str) -> list[PositionedLine]:
    """Parse the tab-separated positioned format: x0 y0 x1 y1 text."""
    lines = []
    for number, raw in enumerate(text.splitlines(), start=1):
        if not raw.strip():
            continue
        parts = raw.split("\t", 4)
        if len(parts) != 5:
            raise ValueError(f"line {number}: expected 'x0<TAB>y0<TAB>x1<TAB>y1<TAB>text'")
        try:
            x0, y0, x1, y1 = (float(v) for v in parts[:4])
        except ValueError:
            raise ValueError(f"line {number}: non-numeric coordinate") from None
        lines.append(PositionedLine(x0, y0, x1, y1, parts[4]))
    return lines


def _widest_valley(lines: Sequence[PositionedLine], axis: int, min_gap: float):
    """Largest whitespace gap along one axis, or None. axis 0 = x, 1 = y."""
    if axis == 0:
        spans = sorted((l.x0, l.x1) for l in lines)
    else:
        spans = sorted((l.y0, l.y1) for l in lines)
    best = None
    reach = spans[0][1]
    for start, end in spans[1:]:
        gap = start - reach
        if gap >= min_gap and (best is None or gap > best[0]):
            best = (gap, reach, start)
        reach = max(reach, end)
    return best


def _xy_cut(lines: list[PositionedLine], min_gap: float) -> list[list[PositionedLine]]:
    if not lines:
        return []
    valley_y = _widest_valley(lines, 1, min_gap)
    valley_x = _widest_valley(lines, 0, min_gap)
    # widest valley wins; ties split top/bottom first, matching reading order
    if valley_y is not None and (valley_x is None or valley_y[0] >= valley_x[0]):
        _, lo, hi = valley_y
        mid = (lo + hi) / 2
        first = [l for l in lines if l.y1 <= mid]
        second = [l for l in lines if l.y1 > mid]
    elif valley_x is not None:
        _, lo, hi = valley_x
        mid = (lo + hi) / 2
        first = [l for l in lines if l.x1 <= mid]
        second = [l for l in lines if l.x1 > mid]
    else:
        return [lines]
    return _xy_cut(first, min_gap) + _xy_cut(second, min_gap)


def segment_positioned(
    lines: Sequence[PositionedLine], min_gap: float = MIN_GAP
) -> list[LayoutBlock]:
    """Recursive X-Y cut, then line-height tagging within each region.

    A line substantially taller than the document median reads as a heading.
    Input order does not matter; lines are sorted by position up front.
    """
    if not lines:
        return []
    ordered = sorted(lines, key=lambda l: (l.y0, l.x0, l.x1, l.text))
    doc_median = statistics.median(l.y1 - l.y0 for l in ordered)
    regions = _xy_cut(list(ordered), min_gap)

    blocks: list[LayoutBlock] = []
    heading_sizes: list[float] = []
    staged: list[tuple[bool, list[PositionedLine]]] = []
    for region in regions:
        region = sorted(region, key=lambda l: (l.y0, l.x0))
        # split the region into runs of heading-height vs body-height lines;
        # heading runs also break on size change so a title directly above a
        # smaller subtitle stays two blocks, while wrapped titles merge
        run: list[PositionedLine] = []
        run_is_heading = False
        run_size: float | None = None
        for line in region:
            height = line.y1 - line.y0
            is_heading = height >= HEADING_HEIGHT_RATIO * doc_median
            size = round(height * 2) / 2 if is_heading else None
            if run and (is_heading != run_is_heading or size != run_size):
                staged.append((run_is_heading, run))
                run = []
            run.append(line)
            run_is_heading = is_heading
            run_size = size
        if run:
            staged.append((run_is_heading, run))

    for is_heading, run in staged:
        if is_heading:
            size = round(statistics.median(l.y1 - l.y0 for l in run) * 2) / 2
            heading_sizes.append(size)
    distinct = sorted(set(heading_sizes), reverse=True)
    level_of = {size: rank for rank, size in enumerate(distinct, start=1)}

    for is_heading, run in staged:
        bbox = (
            min(l.x0 for l in run), min(l.y0 for l in run),
            max(l.x1 for l in run), max(l.y1 for l in run),
        )
        text = "\n".join(l.text for l in run)
        if is_heading:
            size = round(statistics.median(l.y1 - l.y0 for l in run) * 2) / 2
            blocks.append(LayoutBlock(
                text=text, kind="heading", order=len(blocks),
                level=level_of[size], bbox=bbox, font_size=size,
            ))
        else:
            blocks.append(LayoutBlock(text=text, kind="paragraph", order=len(blocks), bbox=bbox))
    return blocks


# --- markup input: HTML and Markdown ---

_VOID_TAGS = frozenset(
    "area base br col embed hr img input link meta param source track wbr".split()
)
_INLINE_TAGS = frozenset(
    "a b i em strong span code small u sup sub mark abbr".split()
)
_HEADING_TAGS = frozenset(f"h{i}" for i in range(1, 7))
_KIND_OF_TAG = {"p": "paragraph", "li": "listItem", "td": "tableCell",
                "th": "tableCell", "caption": "caption"}
_CONTAINER_KIND = {"nav": "header", "header": "header", "footer": "footer"}


class _UnbalancedHtml(Exception):
    def __init__(self, offset: int, tag: str):
        super().__init__(f"unbalanced HTML: unmatched tag <{tag}> at byte offset {offset}")
        self.offset = offset
        self.tag = tag


class _HtmlSegmenter(HTMLParser):
    def __init__(self, raw: str):
        super().__init__(convert_charrefs=True)
        self._raw = raw
        self._line_starts = [0]
        for line in raw.split("\n")[:-1]:
            self._line_starts.append(self._line_starts[-1] + len(line.encode("utf-8")) + 1)
        self.blocks: list[LayoutBlock] = []
        self.doc_title: str | None = None
        self._stack: list[tuple[str, int]] = []
        self._containers: list[str] = []  # active nav/header/footer kinds
        self._block_stack: list[dict] = []
        self._implicit: list[str] = []
        self._skip_depth = 0  # inside script/style
        self._in_title = False
        self._title_parts: list[str] = []
        self._table_stack: list[dict] = []
        self._table_counter = 0

    def _offset(self) -> int:
        line, col = self.getpos()
        prefix = self._raw.split("\n")[line - 1][:col]
        return self._line_starts[line - 1] + len(prefix.encode("utf-8"))

    def _container_kind(self) -> str | None:
        return self._containers[-1] if self._containers else None

    def _flush_implicit(self):
        text = "".join(self._implicit).strip()
        self._implicit.clear()
        if text:
            self._emit("paragraph", text)

    def _emit(self, kind: str, text: str, level: int | None = None, **extras):
        container = self._container_kind()
        if container is not None and kind != "heading":
            kind = container
        elif container is not None:
            kind = container  # headings inside nav/footer are furniture too
            level = None
        self.blocks.append(LayoutBlock(
            text=text, kind=kind, order=len(self.blocks), level=level, **extras
        ))

    def handle_starttag(self, tag, attrs):
        if tag in _VOID_TAGS:
            if tag == "br" and self._block_stack:
                self._block_stack[-1]["parts"].append("\n")
            return
        offset = self._offset()
        self._stack.append((tag, offset))
        if tag in ("script", "style"):
            self._skip_depth += 1
            return
        if tag == "title":
            self._in_title = True
            return
        if tag in _INLINE_TAGS:
            if tag == "a" and self._block_stack:
                ctx = self._block_stack[-1]
                ctx["links"] += 1
                href = dict(attrs).get("href") or ""
                ctx["internal_link"] = ctx["internal_link"] and href.startswith("#")
                ctx["in_link"] = True
            return
        self._flush_implicit()
        if tag in _CONTAINER_KIND:
            self._containers.append(_CONTAINER_KIND[tag])
        elif tag == "table":
            self._table_counter += 1
            self._table_stack.append({"id": self._table_counter, "row": -1, "cell": 0})
        elif tag == "tr" and self._table_stack:
            self._table_stack[-1]["row"] += 1
            self._table_stack[-1]["cell"] = 0
        if tag in _HEADING_TAGS or tag in _KIND_OF_TAG:
            self._block_stack.append({
                "tag": tag, "parts": [], "links": 0, "internal_link": True,
                "in_link": False, "link_text": [],
                "header_cell": tag == "th",
            })

    def handle_endtag(self, tag):
        if tag in _VOID_TAGS:
            return
        if not self._stack:
            raise _UnbalancedHtml(self._offset(), tag)
        if self._stack[-1][0] != tag:
            names = [t for t, _ in self._stack]
            if tag in names:
                # tags opened after the match point were never closed; the
                # earliest of them is the first unmatched tag
                unmatched = self._stack[len(names) - 1 - names[::-1].index(tag) + 1]
                raise _UnbalancedHtml(unmatched[1], unmatched[0])
            raise _UnbalancedHtml(self._offset(), tag)
        self._stack.pop()
        if tag in ("script", "style"):
            self._skip_depth -= 1
            return
        if tag == "title":
            self._in_title = False
            title = "".join(self._title_parts).strip()
            if title and self.doc_title is None:
                self.doc_title = title
            return
        if tag in _INLINE_TAGS:
            if tag == "a" and self._block_stack:
                self._block_stack[-1]["in_link"] = False
            return
        self._flush_implicit()
        if tag in _CONTAINER_KIND:
            self._containers.pop()
            return
        if tag == "table":
            self._table_stack.pop()
            return
        if tag == "tr":
            return
        if tag in _HEADING_TAGS or tag in _KIND_OF_TAG:
            ctx = self._block_stack.pop()
            text = re.sub(r"[ \t]+", " ", "".join(ctx["parts"])).strip()
            if not text:
                return
            if tag in _HEADING_TAGS:
                self._emit("heading", text, level=int(tag[1]),
                           font_size=20.0 - 2.0 * int(tag[1]))
                return
            extras: dict = {}
            if tag in ("td", "th") and self._table_stack:
                grid = self._table_stack[-1]
                extras = {
                    "table_id": grid["id"], "row_id": grid["row"],
                    "cell_index": grid["cell"], "header_cell": ctx["header_cell"],
                }
                grid["cell"] += 1
            link_text = "".join(ctx["link_text"]).strip()
            link_only = (
                ctx["links"] == 1 and ctx["internal_link"] and link_text == text
            )
            self._emit(_KIND_OF_TAG[tag], text, link_only=link_only, **extras)

    def handle_data(self, data):
        if self._skip_depth:
            return
        if self._in_title:
            self._title_parts.append(data)
            return
        if self._block_stack:
            ctx = self._block_stack[-1]
            ctx["parts"].append(data)
            if ctx["in_link"]:
                ctx["link_text"].append(data)
        elif data.strip():
            self._implicit.append(data)

    def close(self):
        super().close()
        self._flush_implicit()
        if self._stack:
            tag, offset = self._stack[0]
            raise _UnbalancedHtml(offset, tag)


_MD_HEADING = re.compile(r"^(#{1,6})\s+(.*?)\s*#*\s*$")
_MD_LIST_ITEM = re.compile(r"^\s*(?:[-*+]|\d+[.)])\s+(.*)$")
_MD_TABLE_ROW = re.compile(r"^\s*\|(.*)\|\s*$")
_MD_TABLE_SEP = re.compile(r"^\s*:?-{3,}:?\s*$")
_MD_LINK_ONLY = re.compile(r"^\[[^\]]+\]\(#[^)]*\)$")
_TOC_LINE = re.compile(r"(\.{2,}\s*\d{1,4}|\s\d{1,4})$")


def _markdown_blocks(text: str) -> list[LayoutBlock]:
    blocks: list[LayoutBlock] = []
    paragraph: list[str] = []
    table: dict | None = None
    table_counter = 0

    def flush_paragraph():
        if paragraph:
            joined = " ".join(paragraph).strip()
            paragraph.clear()
            if joined:
                blocks.append(LayoutBlock(
                    text=joined, kind="paragraph", order=len(blocks),
                    link_only=bool(_MD_LINK_ONLY.match(joined)),
                ))

    def flush_table():
        nonlocal table
        if table is None:
            return
        rows = table["rows"]
        header_row = table["header_row"]
        for row_id, cells in enumerate(rows):
            for cell_index, cell in enumerate(cells):
                blocks.append(LayoutBlock(
                    text=cell, kind="tableCell", order=len(blocks),
                    table_id=table["id"], row_id=row_id, cell_index=cell_index,
                    header_cell=row_id == header_row,
                ))
        table = None

    for raw in text.splitlines():
        heading = _MD_HEADING.match(raw)
        row = _MD_TABLE_ROW.match(raw)
        item = _MD_LIST_ITEM.match(raw)
        if row:
            flush_paragraph()
            cells = [c.strip() for c in row.group(1).split("|")]
            if all(_MD_TABLE_SEP.match(c) for c in cells):
                if table is not None and len(table["rows"]) == 1:
                    table["header_row"] = 0
                continue
            if table is None:
                table_counter += 1
                table = {"id": table_counter, "rows": [], "header_row": None}
            table["rows"].append(cells)
            continue
        flush_table()
        if heading:
            flush_paragraph()
            level = len(heading.group(1))
            blocks.append(LayoutBlock(
                text=heading.group(2), kind="heading", order=len(blocks),
                level=level, font_size=20.0 - 2.0 * level,
            ))
        elif item:
            flush_paragraph()
            content = item.group(1).strip()
            blocks.append(LayoutBlock(
                text=content, kind="listItem", order=len(blocks),
                link_only=bool(_MD_LINK_ONLY.match(content)),
            ))
        elif not raw.strip():
            flush_paragraph()
        elif len(raw.strip()) <= 80 and _TOC_LINE.search(raw.strip()):
            # keep ToC-looking lines as standalone blocks so the run
            # heuristic can see them; ordinary prose merges as usual
            flush_paragraph()
            paragraph.append(raw.strip())
            flush_paragraph()
        else:
            paragraph.append(raw.strip())
    flush_table()
    flush_paragraph()
    return blocks


def _apply_toc_heuristic(blocks: list[LayoutBlock]) -> list[LayoutBlock]:
    """Retag runs of >= 3 consecutive ToC-looking lines as tocEntry.

    A line looks like a table-of-contents entry when it is short and ends in
    a page number (dot leaders or a trailing number) or is nothing but an
    internal link.
    """
    def is_toc_line(b: LayoutBlock) -> bool:
        if b.kind not in ("paragraph", "listItem"):
            return False
        return b.link_only or (len(b.text) <= 80 and bool(_TOC_LINE.search(b.text)))

    out = list(blocks)
    i = 0
    while i < len(out):
        if not is_toc_line(out[i]):
            i += 1
            continue
        j = i
        while j < len(out) and is_toc_line(out[j]):
            j += 1
        if j - i >= 3:
            for k in range(i, j):
                b = out[k]
                out[k] = LayoutBlock(
                    text=b.text, kind="tocEntry", order=b.order,
                    link_only=b.link_only,
                )
        i = j
    return out


_HTML_HINT = re.compile(r"<\s*(!doctype|html|head|body|h[1-6]|p|div|ul|ol|table|nav)\b", re.I)


def _segment_markup(document: str) -> tuple[list[LayoutBlock], str | None]:
    if _HTML_HINT.search(document[:2000]):
        parser = _HtmlSegmenter(document)
        try:
            parser.feed(document)
            parser.close()
        except _UnbalancedHtml as exc:
            raise ValueError(str(exc)) from None
        blocks, title = parser.blocks, parser.doc_title
    else:
        blocks, title = _markdown_blocks(document), None
    blocks = _apply_toc_heuristic(blocks)
    return [
        LayoutBlock(
            text=b.text, kind=b.kind, order=i, level=b.level, bbox=b.bbox,
            font_size=b.font_size, table_id=b.table_id, row_id=b.row_id,
            cell_index=b.cell_index, header_cell=b.header_cell,
            link_only=b.link_only,
        )
        for i, b in enumerate(blocks)
    ], title


def segment_markup(document: str) -> list[LayoutBlock]:
    """Segment HTML or Markdown text into layout blocks.

    The format is sniffed from the content: documents that open with
    structural tags parse as HTML, everything else as Markdown.
    """
    return _segment_markup(document)[0]


# --- intent tree ---

def single_linkage_levels(sizes: Sequence[float], threshold: float = CLUSTER_THRESHOLD) -> dict[float, int]:
    """Cluster 1-D style sizes and rank clusters into levels.

    Single linkage in one dimension reduces to splitting the sorted distinct
    sizes wherever the gap reaches the threshold. Clusters are ranked by
    descending mean size: biggest style is hierarchy level 1.
    """
    distinct = sorted(set(sizes))
    if not distinct:
        return {}
    clusters: list[list[float]] = [[distinct[0]]]
    for size in distinct[1:]:
        if size - clusters[-1][-1] < threshold:
            clusters[-1].append(size)
        else:
            clusters.append([size])
    ranked = sorted(clusters, key=lambda c: -statistics.mean(c))
    level_of: dict[float, int] = {}
    for level, cluster in enumerate(ranked, start=1):
        for size in cluster:
            level_of[size] = level
    return level_of


def _style_size(block: LayoutBlock) -> float:
    if block.font_size is not None:
        return block.font_size
    # markup headings: derive a size from the tag level so one clustering
    # path serves both input families (h1=18, h2=16, ..., h6=8)
    return 20.0 - 2.0 * (block.level or 6)


def build_intent_tree(blocks: Sequence[LayoutBlock], title: str) -> IntentTree:
    """Nest blocks under headings; heading levels come from style clusters."""
    headings = [b for b in blocks if b.kind == "heading"]
    level_of = single_linkage_levels([_style_size(b) for b in headings])
    root = IntentNode(title=title, level=0)
    stack = [root]
    for block in blocks:
        if block.kind == "heading":
            level = level_of[_style_size(block)]
            while stack[-1].level >= level:
                stack.pop()
            node = IntentNode(title=block.text, level=level)
            stack[-1].children.append(node)
            stack.append(node)
        else:
            stack[-1].blocks.append(block)
    return IntentTree(root=root)


# --- QA emission ---

def _node_tables(node: IntentNode) -> list[list[list[LayoutBlock]]]:
    """Group the node's table cells into tables of rows, document order."""
    tables: dict[int, dict[int, list[LayoutBlock]]] = {}
    for b in node.blocks:
        if b.kind == "tableCell" and b.table_id is not None:
            tables.setdefault(b.table_id, {}).setdefault(b.row_id, []).append(b)
    out = []
    for table_id in sorted(tables):
        rows = tables[table_id]
        out.append([
            sorted(rows[r], key=lambda b: b.cell_index or 0) for r in sorted(rows)
        ])
    return out


def _question_like(rows: list[list[LayoutBlock]]) -> bool:
    body = [r for r in rows if r and not r[0].header_cell]
    if not body:
        return False
    asking = sum(1 for r in body if r[0].text.rstrip().endswith("?"))
    return asking / len(body) >= 0.5


def _node_answer_parts(node: IntentNode) -> list[str]:
    parts = []
    flat_tables = {id(t): t for t in _node_tables(node) if not _question_like(t)}
    emitted_tables: set[int] = set()
    for b in node.blocks:
        if b.kind in ("paragraph", "listItem", "caption", "other"):
            parts.append(b.text)
        elif b.kind == "tableCell" and b.table_id is not None:
            for key, table in flat_tables.items():
                if key in emitted_tables:
                    continue
                if any(cell is b for row in table for cell in row):
                    emitted_tables.add(key)
                    parts.extend(" | ".join(c.text for c in row) for row in table)
                    break
    return parts


def tree_to_qa_pairs(
    trees: IntentTree | Sequence[IntentTree],
    start_id: int = 1,
    max_depth: int = MAX_QA_DEPTH,
) -> tuple[list[QAPair], list[str]]:
    """Emit QA pairs from one tree or a batch of trees.

    Titled nodes with answer content become QAPairs wired to their nearest
    ancestor QA; chains are capped at ``max_depth`` by reattaching deeper
    pairs higher up. Question-like tables produce one QA per row. Titles
    repeated across the whole batch are prefixed with their parent title.
    """
    batch = [trees] if isinstance(trees, IntentTree) else list(trees)
    warnings: list[str] = []
    # draft: (node_title, parent_title, parent_draft_index, is_row_qa, question, answer)
    drafts: list[dict] = []

    def depth_of(index: int | None) -> int:
        depth = 0
        while index is not None:
            depth += 1
            index = drafts[index]["parent"]
        return depth

    def capped_parent(index: int | None, node_title: str) -> int | None:
        if index is None:
            return None
        if depth_of(index) >= max_depth:
            warnings.append(
                f"{node_title!r}: nesting deeper than {max_depth} levels, flattened"
            )
            while index is not None and depth_of(index) >= max_depth:
                index = drafts[index]["parent"]
        return index

    def walk(node: IntentNode, parent_index: int | None, parent_title: str | None):
        parts = _node_answer_parts(node)
        my_index = parent_index
        if parts:
            my_index = len(drafts)
            drafts.append({
                "title": node.title,
                "parent_title": parent_title,
                "parent": capped_parent(parent_index, node.title),
                "question": node.title,
                "answer": "\n".join(parts),
                "row_qa": False,
            })
        elif not node.children and not any(
            b.kind == "tableCell" for b in node.blocks
        ):
            if node.title.strip():
                warnings.append(f"{node.title!r}: heading without content, skipped")
            else:
                warnings.append("untitled empty section skipped")
        for table in _node_tables(node):
            if not _question_like(table):
                continue
            for row in table:
                if not row or row[0].header_cell:
                    continue
                question = row[0].text.strip()
                answer = " | ".join(c.text for c in row[1:]).strip()
                if not question or not answer:
                    warnings.append(f"table row {question!r}: incomplete, skipped")
                    continue
                drafts.append({
                    "title": question,
                    "parent_title": node.title,
                    "parent": capped_parent(my_index, question),
                    "question": question,
                    "answer": answer,
                    "row_qa": True,
                })
        for child in node.children:
            walk(child, my_index, node.title)

    for tree in batch:
        walk(tree.root, None, None)

    counts: dict[str, int] = {}
    for d in drafts:
        if not d["row_qa"]:
            counts[d["question"].lower()] = counts.get(d["question"].lower(), 0) + 1
    for d in drafts:
        if not d["row_qa"] and counts[d["question"].lower()] > 1 and d["parent_title"]:
            d["question"] = f"{d['parent_title']} {d['question']}"

    qa_pairs = []
    for offset, d in enumerate(drafts):
        parent_id = None if d["parent"] is None else start_id + d["parent"]
        qa_pairs.append(QAPair(
            id=start_id + offset,
            question=d["question"],
            answer=d["answer"],
            parent_id=parent_id,
            source="extracted",
        ))
    return qa_pairs, warnings


# --- file-level entry points ---

def _segment_path(path: Path) -> tuple[list[LayoutBlock], str]:
    text = path.read_text(encoding="utf-8")
    if path.suffix.lower() == ".txt":
        return segment_positioned(parse_positioned_lines(text)), path.stem
    if path.suffix.lower() in (".md", ".markdown", ".html", ".htm"):
        blocks, title = _segment_markup(text)
        return blocks, title or path.stem
    raise ValueError(f"{path.name}: unsupported extension {path.suffix!r}")


def extract_paths(paths: Sequence[str | Path], start_id: int = 1) -> ExtractionResult:
    """Extract QA pairs from a batch of documents.

    Titles repeat-checked across the whole batch; ids run sequentially in
    document order. The document title is the HTML title when present,
    otherwise the file name.
    """
    trees = []
    for p in paths:
        path = Path(p)
        blocks, title = _segment_path(path)
        trees.append(build_intent_tree(blocks, title=title))
    qa_pairs, warnings = tree_to_qa_pairs(trees, start_id=start_id)
    return ExtractionResult(
        qa_pairs=tuple(qa_pairs), warnings=tuple(warnings), trees=tuple(trees)
    )
