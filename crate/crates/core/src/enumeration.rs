//! The universe of connected graphs: exhaustive built-in generation up to
//! order 7, and streaming graph6 corpora for anything larger.

use std::collections::HashSet;
use std::fs::File;
use std::io::{self, BufRead, BufReader, Write};
use std::path::{Path, PathBuf};

use rayon::prelude::*;
use thiserror::Error;

use crate::canonical::{canonical_rows, CanonicalForm};
use crate::graph::{component_mask, full_mask, Graph, GraphError};

/// Largest order generated in-process.
pub const MAX_BUILTIN_ORDER: usize = 7;

/// Connected isomorphism classes for orders 1 through 9.
pub const CONNECTED_CLASS_COUNTS: [usize; 9] = [1, 1, 2, 6, 21, 112, 853, 11117, 261080];

#[derive(Debug, Error)]
pub enum EnumerationError {
    #[error("built-in enumeration supports 1 <= n <= {MAX_BUILTIN_ORDER}, got {0}")]
    OrderOutOfRange(usize),
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: io::Error,
    },
    #[error("line {line}: {error}")]
    Malformed { line: usize, error: GraphError },
}

/// Canonical forms of all connected graphs of order `n`, sorted.
///
/// Every labelled graph on `n` vertices is visited once, restricted to the
/// labellings whose degrees are non-decreasing in the vertex label (each
/// isomorphism class has one), and deduplicated by canonical form.
pub fn connected_canonical_forms(n: usize) -> Result<Vec<CanonicalForm>, EnumerationError> {
    if n == 0 || n > MAX_BUILTIN_ORDER {
        return Err(EnumerationError::OrderOutOfRange(n));
    }
    let pairs: Vec<(usize, usize)> = (1..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
    let total: u64 = 1 << pairs.len();
    let all = full_mask(n);
    let chunk = 1u64 << 12;

    let seen: HashSet<u128> = (0..total.div_ceil(chunk))
        .into_par_iter()
        .fold(HashSet::new, |mut set, k| {
            let mut adj = [0u64; MAX_BUILTIN_ORDER];
            for mask in k * chunk..((k + 1) * chunk).min(total) {
                adj[..n].fill(0);
                for (b, &(i, j)) in pairs.iter().enumerate() {
                    if mask >> b & 1 == 1 {
                        adj[i] |= 1 << j;
                        adj[j] |= 1 << i;
                    }
                }
                let rows = &adj[..n];
                if rows.windows(2).any(|w| w[0].count_ones() > w[1].count_ones()) {
                    continue;
                }
                if component_mask(rows, 0) != all {
                    continue;
                }
                set.insert(canonical_rows(rows).0);
            }
            set
        })
        .reduce(HashSet::new, |mut a, b| {
            a.extend(b);
            a
        });

    let mut bits: Vec<u128> = seen.into_iter().collect();
    bits.sort_unstable();
    let forms = bits
        .into_iter()
        .map(|b| crate::canonical::form_from_bits(n, b))
        .collect();
    Ok(forms)
}

/// One canonically labelled representative per isomorphism class of
/// connected graphs on `n` vertices, in canonical-form order.
pub fn enumerate_connected(
    n: usize,
) -> Result<impl ExactSizeIterator<Item = Graph>, EnumerationError> {
    Ok(connected_canonical_forms(n)?.into_iter().map(|f| f.to_graph()))
}

/// Write the built-in corpus for order `n` as graph6 lines.
pub fn write_corpus<W: Write>(n: usize, mut out: W) -> Result<usize, EnumerationError> {
    let forms = connected_canonical_forms(n)?;
    let io_err = |source| EnumerationError::Io {
        path: PathBuf::from("<output>"),
        source,
    };
    for f in &forms {
        writeln!(out, "{}", f.to_graph6()).map_err(io_err)?;
    }
    out.flush().map_err(io_err)?;
    Ok(forms.len())
}

/// Streaming graph6 reader; blank lines are skipped and the first malformed
/// line ends the stream with an error naming it.
pub struct Graph6Lines<R> {
    reader: R,
    path: PathBuf,
    line: usize,
    buf: String,
    done: bool,
}

impl<R: BufRead> Graph6Lines<R> {
    pub fn new(reader: R, path: impl Into<PathBuf>) -> Self {
        Self {
            reader,
            path: path.into(),
            line: 0,
            buf: String::new(),
            done: false,
        }
    }
}

impl<R: BufRead> Iterator for Graph6Lines<R> {
    type Item = Result<Graph, EnumerationError>;

    fn next(&mut self) -> Option<Self::Item> {
        while !self.done {
            self.buf.clear();
            self.line += 1;
            match self.reader.read_line(&mut self.buf) {
                Ok(0) => self.done = true,
                Ok(_) => {
                    let text = self.buf.trim();
                    if text.is_empty() {
                        continue;
                    }
                    let r = Graph::from_graph6(text).map_err(|error| EnumerationError::Malformed {
                        line: self.line,
                        error,
                    });
                    self.done = r.is_err();
                    return Some(r);
                }
                Err(source) => {
                    self.done = true;
                    return Some(Err(EnumerationError::Io {
                        path: self.path.clone(),
                        source,
                    }));
                }
            }
        }
        None
    }
}

/// Stream the graphs of a graph6 file in file order.
pub fn ingest(path: impl AsRef<Path>) -> Result<Graph6Lines<BufReader<File>>, EnumerationError> {
    let path = path.as_ref();
    let file = File::open(path).map_err(|source| EnumerationError::Io {
        path: path.to_path_buf(),
        source,
    })?;
    Ok(Graph6Lines::new(BufReader::new(file), path))
}

/// Where a verification run takes its graphs from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CorpusSource {
    Builtin(usize),
    File(PathBuf),
}

impl CorpusSource {
    /// Stream the corpus. Disconnected graphs are dropped.
    pub fn connected_graphs(
        &self,
    ) -> Result<Box<dyn Iterator<Item = Result<Graph, EnumerationError>> + Send>, EnumerationError> {
        match self {
            Self::Builtin(n) => Ok(Box::new(enumerate_connected(*n)?.map(Ok))),
            Self::File(path) => Ok(Box::new(ingest(path)?.filter(|r| match r {
                Ok(g) => g.is_connected(),
                Err(_) => true,
            }))),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::io::Cursor;

    #[test]
    fn small_counts() {
        for n in 1..=6 {
            assert_eq!(
                enumerate_connected(n).unwrap().len(),
                CONNECTED_CLASS_COUNTS[n - 1],
                "n = {n}"
            );
        }
        assert!(matches!(
            connected_canonical_forms(8),
            Err(EnumerationError::OrderOutOfRange(8))
        ));
        assert!(matches!(
            connected_canonical_forms(0),
            Err(EnumerationError::OrderOutOfRange(0))
        ));
    }

    #[test]
    fn enumeration_is_sorted_and_canonical() {
        let forms = connected_canonical_forms(5).unwrap();
        assert!(forms.windows(2).all(|w| w[0] < w[1]));
        for f in &forms {
            let g = f.to_graph();
            assert!(g.is_connected());
            assert_eq!(g.canonical_form().unwrap(), *f);
        }
    }

    #[test]
    fn reader_streams_in_order() {
        let src = Cursor::new("Bw\n\nBg\n");
        let gs: Vec<Graph> = Graph6Lines::new(src, "mem").map(|r| r.unwrap()).collect();
        assert_eq!(gs[0], Graph::complete(3).unwrap());
        assert_eq!(gs[1], Graph::new(3, &[(0, 1), (1, 2)]).unwrap());
        assert_eq!(gs.len(), 2);

        assert_eq!(Graph6Lines::new(Cursor::new(""), "mem").count(), 0);

        let mut it = Graph6Lines::new(Cursor::new("Bw\nB!\nBg\n"), "mem");
        assert!(it.next().unwrap().is_ok());
        match it.next() {
            Some(Err(EnumerationError::Malformed { line: 2, .. })) => {}
            other => panic!("unexpected {other:?}"),
        }
        assert!(it.next().is_none());
    }

    #[test]
    fn corpus_round_trip() {
        let mut buf = Vec::new();
        assert_eq!(write_corpus(4, &mut buf).unwrap(), 6);
        let back: Vec<Graph> = Graph6Lines::new(Cursor::new(buf), "mem")
            .map(|r| r.unwrap())
            .collect();
        assert_eq!(back, enumerate_connected(4).unwrap().collect::<Vec<_>>());
    }
}
