use wasm_bindgen::prelude::*;

fn js(e: String) -> JsError {
    JsError::new(&e)
}

#[wasm_bindgen(js_name = Simulation)]
pub struct JsSimulation(crate::Simulation);

#[wasm_bindgen(js_class = Simulation)]
impl JsSimulation {
    #[wasm_bindgen(constructor)]
    pub fn new(
        rule: &str,
        lattice: &str,
        width: usize,
        height: usize,
        layers: u32,
        density: f64,
        seed: u64,
    ) -> Result<JsSimulation, JsError> {
        crate::Simulation::new(rule, lattice, (width, height), layers, density, seed).map(JsSimulation).map_err(js)
    }

    #[wasm_bindgen(js_name = cellCount)]
    pub fn cell_count(&self) -> usize {
        self.0.cell_count()
    }

    pub fn valence(&self) -> usize {
        self.0.valence()
    }

    pub fn generation(&self) -> f64 {
        self.0.generation() as f64
    }

    pub fn population(&self) -> usize {
        self.0.population()
    }

    pub fn cells(&self) -> Vec<u8> {
        self.0.cells().to_vec()
    }

    pub fn boundary(&self) -> Vec<u8> {
        self.0.boundary().iter().map(|&b| u8::from(b)).collect()
    }

    pub fn step(&mut self, n: u32) -> Result<(), JsError> {
        self.0.step(n).map_err(js)
    }

    pub fn toggle(&mut self, cell: usize) -> Result<(), JsError> {
        self.0.toggle(cell).map_err(js)
    }

    pub fn clear(&mut self) {
        self.0.clear();
    }

    /// `[transient, period]`, or empty when no cycle shows up in time.
    pub fn cycle(&self, max_steps: u32) -> Result<Vec<f64>, JsError> {
        let c = self.0.cycle(u64::from(max_steps)).map_err(js)?;
        Ok(c.map(|(t, p)| vec![t as f64, p as f64]).unwrap_or_default())
    }

    /// Flat `[x, y, depth, …]`.
    pub fn points(&self, yaw: f64, pitch: f64) -> Vec<f64> {
        self.0.points(yaw, pitch).into_iter().flatten().collect()
    }

    /// Flat `[a, b, …]` cell pairs.
    pub fn edges(&self) -> Vec<u32> {
        self.0.edges().into_iter().flat_map(|(a, b)| [a as u32, b as u32]).collect()
    }

    pub fn describe(&self) -> String {
        self.0.describe()
    }
}

#[wasm_bindgen(js_name = ruleSummary)]
pub fn rule_summary(rule: &str, k: u32) -> Result<String, JsError> {
    crate::rule_summary(rule, k).map_err(js)
}

#[wasm_bindgen(js_name = tilingClass)]
pub fn tiling_class(p: u32, k: u32) -> Result<String, JsError> {
    crate::tiling_class(p, k).map_err(js)
}
