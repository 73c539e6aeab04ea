use std::env;
use std::path::PathBuf;

fn main() {
    let crate_dir = PathBuf::from(env::var("CARGO_MANIFEST_DIR").unwrap());
    let header = crate_dir.join("include").join("ordalg.h");
    let mut config = cbindgen::Config::default();
    config.language = cbindgen::Language::C;
    config.include_guard = Some("ORDALG_H".into());
    config.documentation = true;
    config.cpp_compat = true;
    config.enumeration.prefix_with_name = true;
    match cbindgen::Builder::new()
        .with_config(config)
        .with_crate(&crate_dir)
        .generate()
    {
        Ok(bindings) => {
            bindings.write_to_file(&header);
        }
        Err(e) => {
            // keep the committed header if generation is unavailable
            println!("cargo:warning=cbindgen failed, keeping committed header: {e}");
        }
    }
    println!("cargo:rerun-if-changed=src/lib.rs");
}
