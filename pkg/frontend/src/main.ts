import { boot } from "./viewer";

boot();
