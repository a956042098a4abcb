//! OEIS b-file loading, caching and comparison.
//!
//! Lookup order: the cache directory, then (online only) one HTTP fetch
//! that refreshes the cache, then the fixtures compiled into the crate.

use std::fmt;
use std::fs;
use std::io::Write as _;
use std::path::{Path, PathBuf};
use std::str::FromStr;
use std::time::Duration;

use crate::arith::Integer;
use crate::error::OeisError;
use crate::sequences::SequenceTable;

/// Terms compared when probing the offset of a b-file against a table.
pub const ALIGN_PROBE: usize = 3;
pub const HTTP_TIMEOUT: Duration = Duration::from_secs(10);
pub const HTTP_ATTEMPTS: u32 = 2;

const VENDORED: &[(&str, &str)] = &[
    ("A000172", include_str!("../fixtures/A000172.txt")),
    ("A005260", include_str!("../fixtures/A005260.txt")),
    ("A002895", include_str!("../fixtures/A002895.txt")),
    ("A000984", include_str!("../fixtures/A000984.txt")),
];

/// A validated OEIS A-number such as `A005260`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ANumber(String);

impl ANumber {
    pub fn as_str(&self) -> &str {
        &self.0
    }

    /// `https://oeis.org/A005260/b005260.txt`
    pub fn bfile_url(&self) -> String {
        format!("https://oeis.org/{}/b{}.txt", self.0, &self.0[1..])
    }

    pub fn cache_file(&self, dir: &Path) -> PathBuf {
        dir.join(format!("{}.txt", self.0))
    }

    pub fn vendored(&self) -> Option<&'static str> {
        VENDORED.iter().find(|(a, _)| *a == self.0).map(|(_, t)| *t)
    }
}

impl FromStr for ANumber {
    type Err = OeisError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let ok = s.len() == 7 && s.starts_with('A') && s[1..].bytes().all(|b| b.is_ascii_digit());
        if ok {
            Ok(ANumber(s.to_string()))
        } else {
            Err(OeisError::BadANumber(s.to_string()))
        }
    }
}

impl fmt::Display for ANumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Source {
    Network,
    Cache,
    Vendored,
}

impl Source {
    pub fn name(self) -> &'static str {
        match self {
            Source::Network => "network",
            Source::Cache => "cache",
            Source::Vendored => "vendored",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BFileSeries {
    pub anum: ANumber,
    pub entries: Vec<(Integer, Integer)>,
    pub source: Source,
}

/// Parses b-file text into `(index, value)` pairs.
///
/// Blank lines and lines starting with `#` are skipped. Data lines hold two
/// whitespace-separated, optionally signed decimal integers. Indices must be
/// strictly increasing.
pub fn parse_bfile(text: &str) -> Result<Vec<(Integer, Integer)>, OeisError> {
    let mut out: Vec<(Integer, Integer)> = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let err = |reason: &str| OeisError::Parse { line: line_no, reason: reason.to_string() };
        let mut fields = line.split_whitespace();
        let (Some(idx), Some(val), None) = (fields.next(), fields.next(), fields.next()) else {
            return Err(err("expected exactly two fields"));
        };
        let idx: Integer = parse_decimal(idx).ok_or_else(|| err("index is not an integer"))?;
        let val: Integer = parse_decimal(val).ok_or_else(|| err("value is not an integer"))?;
        if let Some((prev, _)) = out.last() {
            if idx <= *prev {
                return Err(err("indices are not strictly increasing"));
            }
        }
        out.push((idx, val));
    }
    Ok(out)
}

fn parse_decimal(s: &str) -> Option<Integer> {
    let digits = s.strip_prefix(['-', '+']).unwrap_or(s);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    s.parse().ok()
}

/// Renders entries as b-file data lines.
pub fn serialize_bfile(entries: &[(Integer, Integer)]) -> String {
    entries.iter().map(|(i, v)| format!("{i} {v}\n")).collect()
}

/// Source of raw b-file bytes from the network.
pub trait Fetcher {
    fn get(&self, url: &str) -> Result<String, String>;
}

/// Blocking HTTP client with a bounded retry.
#[derive(Debug, Clone)]
pub struct HttpFetcher {
    pub timeout: Duration,
    pub attempts: u32,
}

impl Default for HttpFetcher {
    fn default() -> Self {
        HttpFetcher { timeout: HTTP_TIMEOUT, attempts: HTTP_ATTEMPTS }
    }
}

impl Fetcher for HttpFetcher {
    fn get(&self, url: &str) -> Result<String, String> {
        let agent: ureq::Agent = ureq::Agent::config_builder()
            .timeout_global(Some(self.timeout))
            .build()
            .into();
        let mut last = String::from("no attempt made");
        for _ in 0..self.attempts.max(1) {
            match agent.get(url).call() {
                Ok(mut resp) => match resp.body_mut().read_to_string() {
                    Ok(body) => return Ok(body),
                    Err(e) => last = e.to_string(),
                },
                Err(e) => last = e.to_string(),
            }
        }
        Err(last)
    }
}

/// Writes `contents` to `path` through a temporary file and a rename, so
/// readers never observe a partial file.
pub fn write_atomic(path: &Path, contents: &str) -> std::io::Result<()> {
    let dir = path.parent().unwrap_or_else(|| Path::new("."));
    fs::create_dir_all(dir)?;
    let tmp = dir.join(format!(
        ".{}.{}.tmp",
        path.file_name().and_then(|f| f.to_str()).unwrap_or("bfile"),
        std::process::id()
    ));
    {
        let mut f = fs::File::create(&tmp)?;
        f.write_all(contents.as_bytes())?;
        f.sync_all()?;
    }
    fs::rename(&tmp, path)
}

/// Loads a b-file, using `fetcher` only when `offline` is false and the
/// cache has no copy.
pub fn fetch_bfile_with(
    anum: &ANumber,
    offline: bool,
    cache_dir: &Path,
    fetcher: &dyn Fetcher,
) -> Result<BFileSeries, OeisError> {
    let cached = anum.cache_file(cache_dir);
    if cached.is_file() {
        let text = fs::read_to_string(&cached)?;
        return Ok(BFileSeries { anum: anum.clone(), entries: parse_bfile(&text)?, source: Source::Cache });
    }
    let vendored = || {
        anum.vendored().map(|text| {
            parse_bfile(text).map(|entries| BFileSeries {
                anum: anum.clone(),
                entries,
                source: Source::Vendored,
            })
        })
    };
    if offline {
        return vendored().unwrap_or_else(|| Err(OeisError::NotFound(anum.to_string())));
    }
    match fetcher.get(&anum.bfile_url()) {
        Ok(text) => {
            let entries = parse_bfile(&text)?;
            write_atomic(&cached, &text)?;
            Ok(BFileSeries { anum: anum.clone(), entries, source: Source::Network })
        }
        Err(reason) => vendored()
            .unwrap_or_else(|| Err(OeisError::Http { anum: anum.to_string(), reason })),
    }
}

pub fn fetch_bfile(anum: &ANumber, offline: bool, cache_dir: &Path) -> Result<BFileSeries, OeisError> {
    fetch_bfile_with(anum, offline, cache_dir, &HttpFetcher::default())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TermComparison {
    /// Index as written in the b-file.
    pub index: Integer,
    /// Our sequence index paired with it.
    pub n: u64,
    pub ours: Integer,
    pub theirs: Integer,
    pub equal: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Comparison {
    /// Our `n` for the first b-file entry.
    pub offset: u64,
    pub terms: Vec<TermComparison>,
}

impl Comparison {
    pub fn all_equal(&self) -> bool {
        !self.terms.is_empty() && self.terms.iter().all(|t| t.equal)
    }
}

/// Aligns the b-file against `table` and compares term by term.
///
/// The first [`ALIGN_PROBE`] b-file values are matched against our values
/// starting at `n = 0` and at `n = 1`; the first offset that matches wins.
pub fn compare(series: &BFileSeries, table: &SequenceTable) -> Result<Comparison, OeisError> {
    let probe = ALIGN_PROBE.min(series.entries.len());
    let matches_at = |offset: u64| {
        probe > 0
            && series.entries[..probe]
                .iter()
                .enumerate()
                .all(|(j, (_, v))| table.get(offset + j as u64) == Some(v))
    };
    let offset = [0u64, 1].into_iter().find(|&o| matches_at(o)).ok_or(OeisError::Alignment)?;
    let terms = series
        .entries
        .iter()
        .enumerate()
        .map_while(|(j, (index, theirs))| {
            let n = offset + j as u64;
            table.get(n).map(|ours| TermComparison {
                index: index.clone(),
                n,
                ours: ours.clone(),
                theirs: theirs.clone(),
                equal: ours == theirs,
            })
        })
        .collect();
    Ok(Comparison { offset, terms })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sequences::{generate, Method, SequenceId};
    use std::cell::Cell;

    struct Canned {
        body: Result<String, String>,
        calls: Cell<u32>,
    }

    impl Fetcher for Canned {
        fn get(&self, _url: &str) -> Result<String, String> {
            self.calls.set(self.calls.get() + 1);
            self.body.clone()
        }
    }

    fn canned(body: Result<&str, &str>) -> Canned {
        Canned { body: body.map(str::to_string).map_err(str::to_string), calls: Cell::new(0) }
    }

    fn a(s: &str) -> ANumber {
        s.parse().unwrap()
    }

    #[test]
    fn a_numbers() {
        assert_eq!(a("A000172").bfile_url(), "https://oeis.org/A000172/b000172.txt");
        for bad in ["XYZ", "A12345", "A1234567", "a000172", "B000172", "A00017x", ""] {
            assert!(matches!(bad.parse::<ANumber>(), Err(OeisError::BadANumber(_))), "{bad}");
        }
    }

    #[test]
    fn parse_handles_comments_and_signs() {
        let text = "# header\n\n0 1\n1 -2\n  2   +10  \n# trailing\n";
        let e = parse_bfile(text).unwrap();
        assert_eq!(
            e,
            vec![
                (Integer::from(0), Integer::from(1)),
                (Integer::from(1), Integer::from(-2)),
                (Integer::from(2), Integer::from(10)),
            ]
        );
    }

    #[test]
    fn parse_errors_carry_line_numbers() {
        let cases = [
            ("0 1\n1\n", 2),
            ("0 1\n1 2 3\n", 2),
            ("# c\n0 x\n", 2),
            ("0 1\n0 2\n", 2),
            ("0 1\n1 2\n5 1e3\n", 3),
            ("0 --1\n", 1),
        ];
        for (text, line) in cases {
            match parse_bfile(text) {
                Err(OeisError::Parse { line: l, .. }) => assert_eq!(l, line, "{text:?}"),
                other => panic!("{text:?}: {other:?}"),
            }
        }
    }

    #[test]
    fn vendored_fixtures_match_our_values() {
        let dir = tempfile::tempdir().unwrap();
        let cases = [
            ("A000172", SequenceId::Franel3, [1, 2, 10, 56]),
            ("A005260", SequenceId::Franel4, [1, 2, 18, 164]),
            ("A002895", SequenceId::Domb, [1, 4, 28, 256]),
            ("A000984", SequenceId::CentralBinomial, [1, 2, 6, 20]),
        ];
        for (anum, id, head) in cases {
            let s = fetch_bfile(&a(anum), true, dir.path()).unwrap();
            assert_eq!(s.source, Source::Vendored);
            assert_eq!(s.entries.len(), 30);
            let got: Vec<_> = s.entries[..4].iter().map(|(_, v)| v.clone()).collect();
            assert_eq!(got, head.map(Integer::from).to_vec());
            let table = generate(id, 0, 29, Method::Direct).unwrap();
            assert!(compare(&s, &table).unwrap().all_equal(), "{anum}");
        }
    }

    #[test]
    fn offline_without_fixture_is_not_found() {
        let dir = tempfile::tempdir().unwrap();
        let f = canned(Ok("0 1\n"));
        let r = fetch_bfile_with(&a("A999999"), true, dir.path(), &f);
        assert!(matches!(r, Err(OeisError::NotFound(_))));
        assert_eq!(f.calls.get(), 0);
    }

    #[test]
    fn network_fetch_populates_cache_once() {
        let dir = tempfile::tempdir().unwrap();
        let f = canned(Ok("# fake\n0 1\n1 2\n2 10\n"));
        let first = fetch_bfile_with(&a("A000172"), false, dir.path(), &f).unwrap();
        assert_eq!(first.source, Source::Network);
        assert!(dir.path().join("A000172.txt").is_file());
        let second = fetch_bfile_with(&a("A000172"), false, dir.path(), &f).unwrap();
        assert_eq!(second.source, Source::Cache);
        assert_eq!(first.entries, second.entries);
        assert_eq!(f.calls.get(), 1);
        // No stray temp files.
        let names: Vec<_> = fs::read_dir(dir.path()).unwrap().map(|e| e.unwrap().file_name()).collect();
        assert_eq!(names, vec![std::ffi::OsString::from("A000172.txt")]);
    }

    #[test]
    fn http_failure_falls_back_or_errors() {
        let dir = tempfile::tempdir().unwrap();
        let f = canned(Err("connection refused"));
        let s = fetch_bfile_with(&a("A005260"), false, dir.path(), &f).unwrap();
        assert_eq!(s.source, Source::Vendored);
        let r = fetch_bfile_with(&a("A999999"), false, dir.path(), &f);
        assert!(matches!(r, Err(OeisError::Http { .. })));
    }

    #[test]
    fn malformed_network_body_is_not_cached() {
        let dir = tempfile::tempdir().unwrap();
        let f = canned(Ok("<html>oops</html>\n"));
        let r = fetch_bfile_with(&a("A000172"), false, dir.path(), &f);
        assert!(matches!(r, Err(OeisError::Parse { line: 1, .. })));
        assert!(!dir.path().join("A000172.txt").exists());
    }

    #[test]
    fn compare_detects_offset_one() {
        let s = BFileSeries {
            anum: a("A000172"),
            entries: parse_bfile("1 2\n2 10\n3 56\n4 346\n").unwrap(),
            source: Source::Vendored,
        };
        let table = generate(SequenceId::Franel3, 0, 10, Method::Direct).unwrap();
        let c = compare(&s, &table).unwrap();
        assert_eq!(c.offset, 1);
        assert!(c.all_equal());
        assert_eq!(c.terms.len(), 4);
    }

    #[test]
    fn compare_reports_wrong_pairing() {
        let dir = tempfile::tempdir().unwrap();
        let s = fetch_bfile(&a("A000172"), true, dir.path()).unwrap();
        let table = generate(SequenceId::Franel4, 0, 19, Method::Direct).unwrap();
        assert!(matches!(compare(&s, &table), Err(OeisError::Alignment)));
    }

    #[test]
    fn compare_flags_late_mismatch() {
        let mut s = fetch_bfile(&a("A005260"), true, Path::new("/nonexistent")).unwrap();
        s.entries[10].1 += 1;
        let table = generate(SequenceId::Franel4, 0, 19, Method::Recurrence).unwrap();
        let c = compare(&s, &table).unwrap();
        assert_eq!(c.terms.len(), 20);
        assert!(!c.all_equal());
        assert_eq!(c.terms.iter().filter(|t| !t.equal).map(|t| t.n).collect::<Vec<_>>(), vec![10]);
    }

    #[test]
    fn serialize_round_trips() {
        let text = VENDORED[1].1;
        let e = parse_bfile(text).unwrap();
        assert_eq!(parse_bfile(&serialize_bfile(&e)).unwrap(), e);
    }
}
