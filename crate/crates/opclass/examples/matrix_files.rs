//! The on-disk matrix format: row-major complex entries in JSON.
//!
//! `{"rows": n, "cols": m, "entries": [[re, im], ...]}` is what the
//! `classify` subcommand consumes. Floats are printed as shortest
//! round-trip decimals and parsed back exactly, so write-then-read is
//! bitwise lossless and the files are safe to use as golden fixtures.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use opclass::{random_gaussian, read_matrix, write_matrix, MatrixFile};

fn main() -> opclass::Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let m = random_gaussian(2, 3, &mut rng);

    let text = serde_json::to_string(&MatrixFile::from_matrix(&m))?;
    println!("serialized form:\n{text}\n");

    let dir = std::env::temp_dir().join("opclass-matrix-files");
    std::fs::create_dir_all(&dir)?;
    let path = dir.join("roundtrip.json");
    write_matrix(&path, &m)?;
    let back = read_matrix(&path)?;

    let bitwise = m.entries() == back.entries();
    println!("wrote {} and read it back", path.display());
    println!("bitwise identical: {bitwise}");

    // shape and finiteness are validated on read
    let bad = dir.join("bad.json");
    std::fs::write(&bad, r#"{"rows": 2, "cols": 2, "entries": [[1.0, 0.0]]}"#)?;
    match read_matrix(&bad) {
        Err(e) => println!("short entry list rejected: {e}"),
        Ok(_) => println!("UNEXPECTED: malformed file accepted"),
    }
    Ok(())
}
