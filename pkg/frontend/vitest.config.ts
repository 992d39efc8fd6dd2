import { defineConfig } from "vitest/config";

export default defineConfig({
  test: {
    environment: "jsdom",
    globalSetup: "./tests/global-setup.ts",
    // tests share one live server and some of them write to it
    fileParallelism: false,
    testTimeout: 20000,
    hookTimeout: 60000,
  },
});
