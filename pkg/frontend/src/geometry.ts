// Board layouts.  Builder boards are recognised from their vertex count and
// region structure alone and drawn on the exact triangular lattice; any other
// board falls back to a force embedding seeded from the board structure, so
// the same state always produces the same picture.

export interface Point {
  x: number;
  y: number;
}

export interface Layout {
  points: Point[];
  width: number;
  height: number;
  kind: "triangular" | "hexagonal" | "force";
}

const SIDE = 60;
const PAD = 34;
const ROW_HEIGHT = (Math.sqrt(3) / 2) * SIDE;

function regionKey(region: readonly number[]): string {
  return [...region].sort((a, b) => a - b).join(",");
}

function sameRegions(a: readonly number[][], b: readonly number[][]): boolean {
  if (a.length !== b.length) return false;
  const left = a.map(regionKey).sort();
  const right = b.map(regionKey).sort();
  return left.every((k, i) => k === right[i]);
}

// Triangular board with `rows` vertex rows: row r holds r + 1 vertices,
// indexed row-major.
function triangularRegions(rows: number): number[][] {
  const id = (r: number, c: number) => (r * (r + 1)) / 2 + c;
  const regions: number[][] = [];
  for (let r = 0; r < rows - 1; r++) {
    for (let c = 0; c <= r; c++) {
      regions.push([id(r, c), id(r + 1, c), id(r + 1, c + 1)]);
    }
    for (let c = 0; c < r; c++) {
      regions.push([id(r, c), id(r, c + 1), id(r + 1, c + 1)]);
    }
  }
  return regions;
}

// Hexagonal board of side s: row lengths s, s+1, ..., 2s-1, 2s-2, ..., s,
// indexed row-major.
function hexagonalRows(side: number): number[] {
  const rows: number[] = [];
  for (let n = side; n < 2 * side; n++) rows.push(n);
  for (let n = 2 * side - 2; n >= side; n--) rows.push(n);
  return rows;
}

function hexagonalRegions(side: number): number[][] {
  const rows = hexagonalRows(side);
  const starts: number[] = [];
  let acc = 0;
  for (const len of rows) {
    starts.push(acc);
    acc += len;
  }
  const id = (r: number, c: number) => starts[r]! + c;
  const regions: number[][] = [];
  for (let r = 0; r < rows.length - 1; r++) {
    const a = rows[r]!;
    const b = rows[r + 1]!;
    if (b === a + 1) {
      for (let c = 0; c < a; c++) regions.push([id(r, c), id(r + 1, c), id(r + 1, c + 1)]);
      for (let c = 0; c < a - 1; c++) regions.push([id(r, c), id(r, c + 1), id(r + 1, c + 1)]);
    } else {
      for (let c = 0; c < b; c++) regions.push([id(r, c), id(r, c + 1), id(r + 1, c)]);
      for (let c = 0; c < b - 1; c++) regions.push([id(r, c + 1), id(r + 1, c), id(r + 1, c + 1)]);
    }
  }
  return regions;
}

// Rows of a triangular lattice, each row centred, so adjacent rows whose
// lengths differ by one line up as equilateral triangles.
function rowLattice(rowLengths: number[]): Point[] {
  const points: Point[] = [];
  for (let r = 0; r < rowLengths.length; r++) {
    const len = rowLengths[r]!;
    for (let c = 0; c < len; c++) {
      points.push({ x: (c - (len - 1) / 2) * SIDE, y: r * ROW_HEIGHT });
    }
  }
  return points;
}

function detectTriangular(vertices: number, regions: readonly number[][]): Point[] | null {
  for (let rows = 1; (rows * (rows + 1)) / 2 <= vertices; rows++) {
    if ((rows * (rows + 1)) / 2 !== vertices) continue;
    if (!sameRegions(regions, triangularRegions(rows))) return null;
    return rowLattice(Array.from({ length: rows }, (_, r) => r + 1));
  }
  return null;
}

function detectHexagonal(vertices: number, regions: readonly number[][]): Point[] | null {
  for (let side = 1; 3 * side * side - 3 * side + 1 <= vertices; side++) {
    if (3 * side * side - 3 * side + 1 !== vertices) continue;
    if (!sameRegions(regions, hexagonalRegions(side))) return null;
    return rowLattice(hexagonalRows(side));
  }
  return null;
}

function fnv1a(text: string): number {
  let h = 0x811c9dc5;
  for (let i = 0; i < text.length; i++) {
    h ^= text.charCodeAt(i);
    h = Math.imul(h, 0x01000193);
  }
  return h >>> 0;
}

function mulberry32(seed: number): () => number {
  let a = seed >>> 0;
  return () => {
    a = (a + 0x6d2b79f5) | 0;
    let t = Math.imul(a ^ (a >>> 15), 1 | a);
    t = (t + Math.imul(t ^ (t >>> 7), 61 | t)) ^ t;
    return ((t ^ (t >>> 14)) >>> 0) / 4294967296;
  };
}

function regionEdges(regions: readonly number[][]): Array<[number, number]> {
  const edges: Array<[number, number]> = [];
  const seen = new Set<string>();
  for (const region of regions) {
    for (let i = 0; i < region.length; i++) {
      for (let j = i + 1; j < region.length; j++) {
        const a = Math.min(region[i]!, region[j]!);
        const b = Math.max(region[i]!, region[j]!);
        const tag = `${a},${b}`;
        if (!seen.has(tag)) {
          seen.add(tag);
          edges.push([a, b]);
        }
      }
    }
  }
  return edges;
}

// Spring embedding with a fixed iteration count and a seed derived from the
// board structure: no randomness survives into the output.
function forceLayout(vertices: number, regions: readonly number[][]): Point[] {
  const seedText = vertices + "|" + regions.map(regionKey).sort().join(";");
  const rand = mulberry32(fnv1a(seedText));
  const radius = SIDE * Math.max(1.2, Math.sqrt(vertices));
  const points: Point[] = [];
  for (let i = 0; i < vertices; i++) {
    const angle = (2 * Math.PI * i) / Math.max(vertices, 1) + rand() * 0.4;
    points.push({
      x: Math.cos(angle) * radius + rand() * SIDE * 0.1,
      y: Math.sin(angle) * radius + rand() * SIDE * 0.1,
    });
  }
  const edges = regionEdges(regions);
  const rest = SIDE * 1.4;
  const steps = 260;
  for (let step = 0; step < steps; step++) {
    const heat = SIDE * 0.5 * (1 - step / steps) + 0.5;
    const fx = new Array<number>(vertices).fill(0);
    const fy = new Array<number>(vertices).fill(0);
    for (let i = 0; i < vertices; i++) {
      for (let j = i + 1; j < vertices; j++) {
        const dx = points[i]!.x - points[j]!.x;
        const dy = points[i]!.y - points[j]!.y;
        const d2 = dx * dx + dy * dy + 0.01;
        const push = (rest * rest) / d2;
        fx[i]! += dx * push;
        fy[i]! += dy * push;
        fx[j]! -= dx * push;
        fy[j]! -= dy * push;
      }
    }
    for (const [a, b] of edges) {
      const dx = points[b]!.x - points[a]!.x;
      const dy = points[b]!.y - points[a]!.y;
      const d = Math.sqrt(dx * dx + dy * dy) + 1e-9;
      const pull = ((d - rest) / rest) * 2.0;
      fx[a]! += (dx / d) * pull * SIDE;
      fy[a]! += (dy / d) * pull * SIDE;
      fx[b]! -= (dx / d) * pull * SIDE;
      fy[b]! -= (dy / d) * pull * SIDE;
    }
    for (let i = 0; i < vertices; i++) {
      const norm = Math.sqrt(fx[i]! * fx[i]! + fy[i]! * fy[i]!) + 1e-9;
      const cap = Math.min(norm, heat);
      points[i]!.x += (fx[i]! / norm) * cap;
      points[i]!.y += (fy[i]! / norm) * cap;
    }
  }
  return points;
}

function frame(points: Point[], kind: Layout["kind"]): Layout {
  let minX = 0;
  let minY = 0;
  let maxX = 0;
  let maxY = 0;
  if (points.length) {
    minX = Math.min(...points.map((p) => p.x));
    minY = Math.min(...points.map((p) => p.y));
    maxX = Math.max(...points.map((p) => p.x));
    maxY = Math.max(...points.map((p) => p.y));
  }
  const shifted = points.map((p) => ({ x: p.x - minX + PAD, y: p.y - minY + PAD }));
  return {
    points: shifted,
    width: maxX - minX + 2 * PAD,
    height: maxY - minY + 2 * PAD,
    kind,
  };
}

export function layoutFor(vertices: number, regions: readonly number[][]): Layout {
  const tri = detectTriangular(vertices, regions);
  if (tri) return frame(tri, "triangular");
  const hex = detectHexagonal(vertices, regions);
  if (hex) return frame(hex, "hexagonal");
  return frame(forceLayout(vertices, regions), "force");
}
