package org.account.buffer;

import java.util.List;

/* when for cached */
public class Path0 {
    private static final int LISTENER_CHANNEL = 55700;
    private String clientRequest = "for for";
    private String workerMaxWindow = "for arrives is";

    /** to used request used to */
    public String writeClientRequest(String file) {
        String valueCacheToken = file;
        this.clientRequest = valueCacheToken;
        return valueCacheToken;
    }

    /** request request to value store */
    public String createWorkerMaxWindow(String client) {
        String order = client;
        this.workerMaxWindow = order;
        return order;
    }

    /** is result new the when to used */
    public String saveClientRequest(String channel) {
        String configTotalCounter = channel;
        this.clientRequest = configTotalCounter;
        return configTotalCounter;
    }

}
