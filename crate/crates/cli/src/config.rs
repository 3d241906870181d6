//! Enumeration settings from flags, `SUBSYSFORGE_CAP` and a key=value file.
//! Flags win over the environment, which wins over the file.

use std::path::Path;

use subsysforge::EnumConfig;

pub const CAP_ENV: &str = "SUBSYSFORGE_CAP";

#[derive(Debug, Default, PartialEq, Eq)]
pub struct FileConfig {
    pub cap: Option<u128>,
    pub workers: Option<usize>,
}

impl FileConfig {
    pub fn parse(text: &str) -> Result<FileConfig, String> {
        let mut out = FileConfig::default();
        for (i, line) in text.lines().enumerate() {
            let line = line.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (key, val) = line
                .split_once('=')
                .ok_or_else(|| format!("config line {}: expected key=value", i + 1))?;
            let (key, val) = (key.trim(), val.trim());
            let bad = |_| format!("config line {}: bad value {val:?} for {key}", i + 1);
            match key {
                "cap" => out.cap = Some(val.parse().map_err(bad)?),
                "workers" => out.workers = Some(val.parse().map_err(bad)?),
                _ => return Err(format!("config line {}: unknown key {key:?}", i + 1)),
            }
        }
        Ok(out)
    }

    pub fn load(path: &Path) -> Result<FileConfig, String> {
        let text = std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
        Self::parse(&text)
    }
}

pub fn resolve(
    cap_flag: Option<u128>,
    workers_flag: Option<usize>,
    env_cap: Option<String>,
    file: &FileConfig,
) -> Result<EnumConfig, String> {
    let env_cap = match env_cap {
        Some(v) => Some(v.trim().parse::<u128>().map_err(|_| format!("{CAP_ENV}={v:?} is not a number"))?),
        None => None,
    };
    let mut cfg = EnumConfig::default();
    if let Some(cap) = cap_flag.or(env_cap).or(file.cap) {
        cfg.cap = cap;
    }
    cfg.workers = workers_flag.or(file.workers);
    Ok(cfg)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn precedence() {
        let file = FileConfig::parse("# tuning\ncap = 100\nworkers=2\n").unwrap();
        assert_eq!(file, FileConfig { cap: Some(100), workers: Some(2) });
        assert_eq!(resolve(None, None, None, &file).unwrap().cap, 100);
        assert_eq!(resolve(None, None, Some("50".into()), &file).unwrap().cap, 50);
        let cfg = resolve(Some(7), Some(1), Some("50".into()), &file).unwrap();
        assert_eq!((cfg.cap, cfg.workers), (7, Some(1)));
        assert!(FileConfig::parse("depth=3").is_err());
        assert!(resolve(None, None, Some("lots".into()), &file).is_err());
    }
}
