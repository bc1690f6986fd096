import { route } from "./ui.js";

window.addEventListener("hashchange", route);
window.addEventListener("DOMContentLoaded", route);
