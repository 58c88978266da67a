//! Persistent coefficient cache: one JSON record per line, appended as
//! values are computed. On load, later lines win over earlier ones, and a
//! torn final line from an interrupted run is skipped.

use std::collections::HashMap;
use std::fs::{File, OpenOptions};
use std::io::{self, BufRead, BufReader, BufWriter, Read, Seek, SeekFrom, Write};
use std::path::Path;
use std::sync::{Mutex, RwLock};

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use schubert_core::moduli::decimal;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Kind {
    Lr,
    Qlr,
    FlagSc,
    CbRank,
    CbDeg4,
    GwDeg4,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CacheRecord {
    pub kind: Kind,
    pub key: String,
    #[serde(with = "decimal")]
    pub value: BigInt,
}

pub struct Cache {
    entries: RwLock<HashMap<(Kind, String), BigInt>>,
    writer: Mutex<BufWriter<File>>,
}

impl Cache {
    pub fn open(path: impl AsRef<Path>) -> io::Result<Self> {
        let path = path.as_ref();
        let mut entries = HashMap::new();
        match File::open(path) {
            Ok(file) => {
                for line in BufReader::new(file).lines() {
                    let line = line?;
                    if line.trim().is_empty() {
                        continue;
                    }
                    match serde_json::from_str::<CacheRecord>(&line) {
                        Ok(rec) => {
                            entries.insert((rec.kind, rec.key), rec.value);
                        }
                        Err(e) => eprintln!("warning: skipping bad cache line in {}: {e}", path.display()),
                    }
                }
            }
            Err(e) if e.kind() == io::ErrorKind::NotFound => {}
            Err(e) => return Err(e),
        }
        let mut file = OpenOptions::new().create(true).append(true).read(true).open(path)?;
        // start fresh records on their own line after a torn write
        let len = file.metadata()?.len();
        if len > 0 {
            let mut last = [0u8; 1];
            file.seek(SeekFrom::Start(len - 1))?;
            file.read_exact(&mut last)?;
            if last[0] != b'\n' {
                file.write_all(b"\n")?;
            }
        }
        Ok(Cache {
            entries: RwLock::new(entries),
            writer: Mutex::new(BufWriter::new(file)),
        })
    }

    pub fn get(&self, kind: Kind, key: &str) -> Option<BigInt> {
        self.entries
            .read()
            .expect("cache lock")
            .get(&(kind, key.to_string()))
            .cloned()
    }

    pub fn insert(&self, kind: Kind, key: String, value: BigInt) -> io::Result<()> {
        let record = CacheRecord { kind, key, value };
        let line = serde_json::to_string(&record).map_err(io::Error::other)?;
        {
            let mut w = self.writer.lock().expect("cache writer lock");
            writeln!(w, "{line}")?;
        }
        self.entries
            .write()
            .expect("cache lock")
            .insert((record.kind, record.key), record.value);
        Ok(())
    }

    /// Looks up `key`, computing and recording the value on a miss.
    pub fn get_or_compute<E>(
        &self,
        kind: Kind,
        key: String,
        compute: impl FnOnce() -> Result<BigInt, E>,
    ) -> Result<BigInt, E>
    where
        E: From<io::Error>,
    {
        if let Some(v) = self.get(kind, &key) {
            return Ok(v);
        }
        let value = compute()?;
        self.insert(kind, key, value.clone())?;
        Ok(value)
    }

    pub fn flush(&self) -> io::Result<()> {
        self.writer.lock().expect("cache writer lock").flush()
    }
}

impl Drop for Cache {
    fn drop(&mut self) {
        let _ = self.flush();
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip_and_last_writer_wins() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("cache.jsonl");
        {
            let cache = Cache::open(&path).unwrap();
            cache.insert(Kind::Lr, "a".into(), BigInt::from(3)).unwrap();
            cache.insert(Kind::Lr, "a".into(), BigInt::from(4)).unwrap();
            cache.insert(Kind::CbRank, "a".into(), BigInt::from(5)).unwrap();
        }
        let cache = Cache::open(&path).unwrap();
        assert_eq!(cache.get(Kind::Lr, "a"), Some(BigInt::from(4)));
        assert_eq!(cache.get(Kind::CbRank, "a"), Some(BigInt::from(5)));
        assert_eq!(cache.get(Kind::Qlr, "a"), None);
    }

    #[test]
    fn torn_line_is_skipped() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("cache.jsonl");
        std::fs::write(
            &path,
            "{\"kind\":\"gw_deg4\",\"key\":\"k\",\"value\":\"7\"}\n{\"kind\":\"gw_de",
        )
        .unwrap();
        {
            let cache = Cache::open(&path).unwrap();
            assert_eq!(cache.get(Kind::GwDeg4, "k"), Some(BigInt::from(7)));
            cache.insert(Kind::GwDeg4, "j".into(), BigInt::from(8)).unwrap();
        }
        let cache = Cache::open(&path).unwrap();
        assert_eq!(cache.get(Kind::GwDeg4, "j"), Some(BigInt::from(8)));
    }

    #[test]
    fn record_format() {
        let rec = CacheRecord {
            kind: Kind::FlagSc,
            key: "[1,3,2]".into(),
            value: BigInt::from(12),
        };
        assert_eq!(
            serde_json::to_string(&rec).unwrap(),
            r#"{"kind":"flag_sc","key":"[1,3,2]","value":"12"}"#
        );
    }
}
