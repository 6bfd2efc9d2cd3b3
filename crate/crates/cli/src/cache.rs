//! Binary cache of an enumerated group and its quantum Bruhat graph.
//!
//! Layout, little-endian: `"WQBG"`, `u32` version, `u32`-prefixed type label,
//! `u32` rank, `u64` element count, then two `u64`-length-prefixed sections
//! (element images as `u16`; edges as `u32` source, `u32` target, `u8` kind,
//! `u16` root) and a trailing CRC-32 of everything before it.

use std::path::Path;
use std::sync::Arc;

use wqbg_core::qbg::{Edge, EdgeKind};
use wqbg_core::{CoxeterGroup, EnumeratedGroup, GroupElement, QuantumBruhatGraph};

use crate::error::{CliError, CliResult};

pub const MAGIC: &[u8; 4] = b"WQBG";
pub const VERSION: u32 = 1;

fn err(kind: &'static str, detail: impl Into<String>) -> CliError {
    CliError::Cache {
        kind,
        detail: detail.into(),
    }
}

pub fn encode(label: &str, q: &QuantumBruhatGraph) -> Vec<u8> {
    let g = q.group();
    let mut out = Vec::new();
    out.extend_from_slice(MAGIC);
    out.extend_from_slice(&VERSION.to_le_bytes());
    out.extend_from_slice(&(label.len() as u32).to_le_bytes());
    out.extend_from_slice(label.as_bytes());
    out.extend_from_slice(&(g.rank() as u32).to_le_bytes());
    out.extend_from_slice(&(g.len() as u64).to_le_bytes());
    let mut sec = Vec::new();
    for w in g.elements() {
        for &x in &w.images {
            sec.extend_from_slice(&x.to_le_bytes());
        }
    }
    out.extend_from_slice(&(sec.len() as u64).to_le_bytes());
    out.extend_from_slice(&sec);
    sec.clear();
    for e in q.edges() {
        sec.extend_from_slice(&e.source.to_le_bytes());
        sec.extend_from_slice(&e.target.to_le_bytes());
        sec.push(u8::from(e.kind == EdgeKind::Down));
        sec.extend_from_slice(&e.root.to_le_bytes());
    }
    out.extend_from_slice(&(sec.len() as u64).to_le_bytes());
    out.extend_from_slice(&sec);
    let crc = crc32fast::hash(&out);
    out.extend_from_slice(&crc.to_le_bytes());
    out
}

struct Reader<'a> {
    buf: &'a [u8],
    pos: usize,
}

impl<'a> Reader<'a> {
    fn take(&mut self, n: usize) -> CliResult<&'a [u8]> {
        let end = self.pos.checked_add(n).filter(|&e| e <= self.buf.len());
        let end = end.ok_or_else(|| err("format", "section runs past the end"))?;
        let s = &self.buf[self.pos..end];
        self.pos = end;
        Ok(s)
    }
    fn u16(&mut self) -> CliResult<u16> {
        Ok(u16::from_le_bytes(self.take(2)?.try_into().expect("2 bytes")))
    }
    fn u32(&mut self) -> CliResult<u32> {
        Ok(u32::from_le_bytes(self.take(4)?.try_into().expect("4 bytes")))
    }
    fn u64(&mut self) -> CliResult<u64> {
        Ok(u64::from_le_bytes(self.take(8)?.try_into().expect("8 bytes")))
    }
}

pub fn decode(bytes: &[u8]) -> CliResult<(String, QuantumBruhatGraph)> {
    if bytes.len() < 8 || &bytes[..4] != MAGIC {
        if bytes.len() >= 4 && &bytes[..4] == MAGIC {
            return Err(err("checksum", "file is truncated"));
        }
        return Err(err("format", "missing WQBG magic"));
    }
    let version = u32::from_le_bytes(bytes[4..8].try_into().expect("4 bytes"));
    if version != VERSION {
        return Err(err("version", format!("file has version {version}, expected {VERSION}")));
    }
    if bytes.len() < 12 {
        return Err(err("checksum", "file is truncated"));
    }
    let (body, tail) = bytes.split_at(bytes.len() - 4);
    let stored = u32::from_le_bytes(tail.try_into().expect("4 bytes"));
    if crc32fast::hash(body) != stored {
        return Err(err("checksum", "CRC-32 mismatch (truncated or corrupted file)"));
    }
    let mut r = Reader { buf: body, pos: 8 };
    let n = r.u32()? as usize;
    let label = String::from_utf8(r.take(n)?.to_vec()).map_err(|_| err("format", "label is not UTF-8"))?;
    let group = CoxeterGroup::from_label(&label)?;
    let rank = r.u32()? as usize;
    let count = r.u64()? as usize;
    if rank != group.rank() {
        return Err(err("format", format!("rank {rank} does not match {label}")));
    }
    let npos = group.num_positive();
    let len = r.u64()? as usize;
    if len != count * npos * 2 {
        return Err(err("format", "element section has the wrong size"));
    }
    let mut elements = Vec::with_capacity(count);
    for _ in 0..count {
        let images = (0..npos).map(|_| r.u16()).collect::<CliResult<Vec<u16>>>()?;
        elements.push(GroupElement { images });
    }
    let e = Arc::new(EnumeratedGroup::from_elements(group, elements)?);
    let len = r.u64()? as usize;
    if len % 11 != 0 {
        return Err(err("format", "edge section has the wrong size"));
    }
    let mut edges = Vec::with_capacity(len / 11);
    for _ in 0..len / 11 {
        let source = r.u32()?;
        let target = r.u32()?;
        let kind = match r.take(1)?[0] {
            0 => EdgeKind::Up,
            1 => EdgeKind::Down,
            k => return Err(err("format", format!("bad edge kind {k}"))),
        };
        let root = r.u16()?;
        edges.push(Edge {
            source,
            target,
            root,
            kind,
        });
    }
    if r.pos != body.len() {
        return Err(err("format", "trailing bytes"));
    }
    Ok((label, QuantumBruhatGraph::from_edges(e, &edges)?))
}

pub fn save(path: &Path, label: &str, q: &QuantumBruhatGraph) -> CliResult<()> {
    std::fs::write(path, encode(label, q))?;
    Ok(())
}

pub fn load(path: &Path) -> CliResult<(String, QuantumBruhatGraph)> {
    decode(&std::fs::read(path)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use wqbg_core::coxeter::DEFAULT_BUDGET;

    fn graph(l: &str) -> QuantumBruhatGraph {
        let e = Arc::new(EnumeratedGroup::from_label(l, DEFAULT_BUDGET).unwrap());
        QuantumBruhatGraph::build_generalized(e).unwrap()
    }

    #[test]
    fn round_trip_is_identical() {
        let q = graph("B3");
        let bytes = encode("B3", &q);
        let (label, back) = decode(&bytes).unwrap();
        assert_eq!(label, "B3");
        assert_eq!(back.group().elements(), q.group().elements());
        assert_eq!(back.edges().collect::<Vec<_>>(), q.edges().collect::<Vec<_>>());
        assert_eq!(encode("B3", &back), bytes);
    }

    #[test]
    fn damage_is_detected() {
        let bytes = encode("A3", &graph("A3"));
        let short = &bytes[..bytes.len() - 7];
        assert!(matches!(decode(short), Err(CliError::Cache { kind: "checksum", .. })));
        let mut stale = bytes.clone();
        stale[4] = 0;
        assert!(matches!(decode(&stale), Err(CliError::Cache { kind: "version", .. })));
        let mut flipped = bytes;
        let k = flipped.len() / 2;
        flipped[k] ^= 1;
        assert!(matches!(decode(&flipped), Err(CliError::Cache { kind: "checksum", .. })));
    }
}
