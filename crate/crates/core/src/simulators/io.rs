//! Sample-set serialization: headered CSV for plotting and a compact
//! binary container that round-trips the generating parameters and seed.

use std::io::{Read, Write};
use std::path::Path;

use crate::error::{Error, Result};
use crate::params::ParamPoint;
use crate::simulators::SampleSet;

const MAGIC: &[u8; 4] = b"LRSS";
const FORMAT_VERSION: u16 = 1;

/// Write features as CSV with header `x0,...,x{p-1}`, one row per sample,
/// 17 significant digits per value.
pub fn write_csv<W: Write>(samples: &SampleSet, mut out: W) -> Result<()> {
    let header: Vec<String> = (0..samples.n_cols()).map(|j| format!("x{j}")).collect();
    writeln!(out, "{}", header.join(","))?;
    for row in samples.rows() {
        let cells: Vec<String> = row.iter().map(|v| format!("{v:.16e}")).collect();
        writeln!(out, "{}", cells.join(","))?;
    }
    Ok(())
}

pub fn write_csv_path(samples: &SampleSet, path: &Path) -> Result<()> {
    let file = std::fs::File::create(path)?;
    write_csv(samples, std::io::BufWriter::new(file))
}

/// Binary layout, little-endian throughout:
///
/// ```text
/// magic "LRSS" | version u16 | feature_dim u16 | param_dim u16
/// seed u64 | n_rows u64 | params f64 × param_dim | data f64 × (n·p)
/// ```
pub fn write_binary<W: Write>(samples: &SampleSet, mut out: W) -> Result<()> {
    out.write_all(MAGIC)?;
    out.write_all(&FORMAT_VERSION.to_le_bytes())?;
    out.write_all(&(samples.n_cols() as u16).to_le_bytes())?;
    out.write_all(&(samples.params().dim() as u16).to_le_bytes())?;
    out.write_all(&samples.seed().to_le_bytes())?;
    out.write_all(&(samples.n_rows() as u64).to_le_bytes())?;
    for v in samples.params().values() {
        out.write_all(&v.to_le_bytes())?;
    }
    for row in samples.rows() {
        for v in row {
            out.write_all(&v.to_le_bytes())?;
        }
    }
    Ok(())
}

pub fn write_binary_path(samples: &SampleSet, path: &Path) -> Result<()> {
    let file = std::fs::File::create(path)?;
    write_binary(samples, std::io::BufWriter::new(file))
}

pub fn read_binary<R: Read>(mut input: R) -> Result<SampleSet> {
    let mut magic = [0u8; 4];
    input.read_exact(&mut magic)?;
    if &magic != MAGIC {
        return Err(Error::Format("bad magic; not a sample container".into()));
    }
    let version = read_u16(&mut input)?;
    if version != FORMAT_VERSION {
        return Err(Error::Format(format!(
            "unsupported sample container version {version}"
        )));
    }
    let n_cols = read_u16(&mut input)? as usize;
    let param_dim = read_u16(&mut input)? as usize;
    let seed = read_u64(&mut input)?;
    let n_rows = read_u64(&mut input)? as usize;
    let mut params = Vec::with_capacity(param_dim);
    for _ in 0..param_dim {
        params.push(read_f64(&mut input)?);
    }
    let mut data = Vec::with_capacity(n_rows * n_cols);
    for _ in 0..n_rows * n_cols {
        data.push(read_f64(&mut input)?);
    }
    SampleSet::new(data, n_rows, n_cols, ParamPoint::new(params), seed)
}

pub fn read_binary_path(path: &Path) -> Result<SampleSet> {
    let file = std::fs::File::open(path)?;
    read_binary(std::io::BufReader::new(file))
}

fn read_u16<R: Read>(input: &mut R) -> Result<u16> {
    let mut buf = [0u8; 2];
    input.read_exact(&mut buf)?;
    Ok(u16::from_le_bytes(buf))
}

fn read_u64<R: Read>(input: &mut R) -> Result<u64> {
    let mut buf = [0u8; 8];
    input.read_exact(&mut buf)?;
    Ok(u64::from_le_bytes(buf))
}

fn read_f64<R: Read>(input: &mut R) -> Result<f64> {
    let mut buf = [0u8; 8];
    input.read_exact(&mut buf)?;
    Ok(f64::from_le_bytes(buf))
}
